import logging
from pathlib import Path
from typing import Mapping, Optional, Union

import numpy as np

from ..exception import ExportError
from ..fem import ScalarFieldP1
from ..mesh import SimplicialMesh, dump_mesh
from .atomic import atomic_write
from .export_format import ExportFormat
from .svg_writer import render_svg
from .vtk_writer import render_vtk

_LOGGER = logging.getLogger(__name__)

Fields = Mapping[str, Union[ScalarFieldP1, np.ndarray]]


def _field_values(mesh: SimplicialMesh, name: str, field) -> np.ndarray:
    if isinstance(field, ScalarFieldP1):
        if not field.mesh.is_same(mesh):
            raise ExportError(f"field '{name}' does not live on the exported mesh")
        return field.values
    return np.asarray(field, dtype=float)


def export_mesh(
    mesh: SimplicialMesh,
    fields: Optional[Fields],
    fmt: Union[ExportFormat, str],
    path: Union[str, Path],
):
    """Write mesh (and nodal fields) as native text, legacy VTK or a 2D SVG; the write is atomic."""
    try:
        fmt = ExportFormat(fmt)
    except ValueError:
        raise ExportError(f'unknown export format {fmt!r}') from None
    values = {name: _field_values(mesh, name, field) for name, field in (fields or {}).items()}

    if fmt == ExportFormat.NATIVE:
        data = dump_mesh(mesh)
    elif fmt == ExportFormat.VTK_LEGACY:
        data = render_vtk(mesh, values)
    else:
        if mesh.dim != 2:
            raise ExportError(f'{fmt.value} needs a 2D mesh, got {mesh.dim}D')
        data = render_svg(mesh, next(iter(values.values()), None))

    atomic_write(path, data)
    _LOGGER.debug(f'Wrote {fmt.value} to {path}')
