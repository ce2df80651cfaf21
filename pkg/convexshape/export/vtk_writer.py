"""ASCII legacy VTK unstructured grid"""

from typing import Mapping

import numpy as np

from ..exception import ExportError
from ..mesh import SimplicialMesh
from .const import FLOAT_FORMAT, VTK_CELL_TYPES, VTK_HEADER


def _fmt(x: float) -> str:
    return format(float(x), FLOAT_FORMAT)


def render_vtk(mesh: SimplicialMesh, fields: Mapping[str, np.ndarray], title: str = "convexshape") -> str:
    """Points padded to 3D, one cell block, then every nodal field as a SCALARS array."""
    nv, nc, d = mesh.num_vertices, mesh.num_cells, mesh.dim
    points = np.zeros((nv, 3))
    points[:, :d] = mesh.vertices

    lines = [VTK_HEADER, title.replace('\n', ' '), "ASCII", "DATASET UNSTRUCTURED_GRID", f"POINTS {nv} double"]
    lines.extend(' '.join(_fmt(x) for x in p) for p in points)
    lines.append(f"CELLS {nc} {nc * (d + 2)}")
    lines.extend(f"{d + 1} " + ' '.join(str(int(v)) for v in cell) for cell in mesh.cells)
    lines.append(f"CELL_TYPES {nc}")
    lines.extend(str(VTK_CELL_TYPES[d]) for _ in range(nc))

    if fields:
        lines.append(f"POINT_DATA {nv}")
        for name, values in fields.items():
            values = np.asarray(values, dtype=float).reshape(-1)
            if values.size != nv:
                raise ExportError(f"field '{name}' has {values.size} values for {nv} points")
            if not name or any(c.isspace() for c in name):
                raise ExportError(f"invalid VTK array name '{name}'")
            lines.append(f"SCALARS {name} double 1")
            lines.append("LOOKUP_TABLE default")
            lines.extend(_fmt(v) for v in values)
    return '\n'.join(lines) + '\n'
