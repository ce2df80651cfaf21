from typing import Optional, Tuple

import numpy as np
from lxml import etree

from ..exception import ExportError
from ..mesh import SimplicialMesh
from .const import (
    SVG_BOUNDARY_COLOR, SVG_EDGE_COLOR, SVG_MARGIN, SVG_NAMESPACE, SVG_RAMP_HIGH, SVG_RAMP_LOW, SVG_WIDTH
)


def ramp_color(s: float, low: Tuple[int, int, int] = SVG_RAMP_LOW, high: Tuple[int, int, int] = SVG_RAMP_HIGH) -> str:
    """Linear two-color ramp for s in [0, 1]"""
    s = min(max(float(s), 0.0), 1.0)
    rgb = [round(a + s * (b - a)) for a, b in zip(low, high)]
    return '#{:02x}{:02x}{:02x}'.format(*rgb)


def _normalized(values: np.ndarray) -> np.ndarray:
    lo, hi = float(values.min()), float(values.max())
    if hi - lo <= 0:
        return np.zeros_like(values)
    return (values - lo) / (hi - lo)


def render_svg(mesh: SimplicialMesh, values: Optional[np.ndarray] = None) -> bytes:
    """Filled triangles colored by the cell mean of values, plus the boundary outline"""
    if mesh.dim != 2:
        raise ExportError(f'SVG output needs a 2D mesh, got {mesh.dim}D')

    lower, upper = mesh.bounds
    extent = max(float(np.max(upper - lower)), 1e-300)
    margin = SVG_MARGIN * extent
    scale = SVG_WIDTH / (extent + 2 * margin)
    width = (upper[0] - lower[0] + 2 * margin) * scale
    height = (upper[1] - lower[1] + 2 * margin) * scale

    # SVG y axis points down
    xy = np.column_stack([
        (mesh.vertices[:, 0] - lower[0] + margin) * scale,
        (upper[1] - mesh.vertices[:, 1] + margin) * scale,
    ])

    def points_attr(ids) -> str:
        return ' '.join(f'{xy[i, 0]:.4f},{xy[i, 1]:.4f}' for i in ids)

    root = etree.Element(f'{{{SVG_NAMESPACE}}}svg', nsmap={None: SVG_NAMESPACE})
    root.set('width', f'{width:.2f}')
    root.set('height', f'{height:.2f}')
    root.set('viewBox', f'0 0 {width:.4f} {height:.4f}')

    cells = etree.SubElement(root, f'{{{SVG_NAMESPACE}}}g', id='cells', stroke=SVG_EDGE_COLOR)
    cells.set('stroke-width', '0.3')
    if values is not None:
        values = np.asarray(values, dtype=float).reshape(-1)
        if values.size != mesh.num_vertices:
            raise ExportError(f'coloring field has {values.size} values for {mesh.num_vertices} vertices')
        shades = _normalized(values[mesh.cells].mean(axis=1))
    else:
        shades = np.zeros(mesh.num_cells)
    for cell, shade in zip(mesh.cells, shades):
        etree.SubElement(cells, f'{{{SVG_NAMESPACE}}}polygon', points=points_attr(cell), fill=ramp_color(shade))

    outline = etree.SubElement(root, f'{{{SVG_NAMESPACE}}}polygon', id='boundary',
                               points=points_attr(mesh.boundary.loop), fill='none', stroke=SVG_BOUNDARY_COLOR)
    outline.set('stroke-width', '1.5')
    return etree.tostring(root, xml_declaration=True, encoding='UTF-8', pretty_print=True)
