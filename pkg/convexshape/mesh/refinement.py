import logging

import numpy as np

from .const import LOCAL_EDGES
from .simplicial_mesh import SimplicialMesh

_LOGGER = logging.getLogger(__name__)


def _edge_midpoints(mesh: SimplicialMesh):
    """Unique edges of the mesh and, per cell, the ids of the new midpoint vertices."""
    local = np.array(LOCAL_EDGES[mesh.dim])
    cell_edges = np.sort(mesh.cells[:, local], axis=2).reshape(-1, 2)
    edges, inverse = np.unique(cell_edges, axis=0, return_inverse=True)
    midpoint_ids = mesh.num_vertices + inverse.reshape(mesh.num_cells, len(local))
    midpoints = 0.5 * (mesh.vertices[edges[:, 0]] + mesh.vertices[edges[:, 1]])
    return edges, midpoints, midpoint_ids


def uniform_refine(mesh: SimplicialMesh) -> SimplicialMesh:
    """
    Red refinement: every triangle splits into 4 and every tetrahedron into 8
    children, adding one vertex per edge.  Boundary vertices keep their ids.

    Tetrahedra follow Bey's ordering, cutting the inner octahedron along x02-x13.
    Two of the octahedral children would come out negatively oriented; they are built
    with local vertices 0 and 2 exchanged, which keeps the pairs {0, 2} and {1, 3}
    and with them the diagonal chosen on the next level.
    """
    edges, midpoints, m = _edge_midpoints(mesh)
    vertices = np.vstack([mesh.vertices, midpoints])
    c = mesh.cells

    if mesh.dim == 2:
        m01, m12, m20 = m[:, 0], m[:, 1], m[:, 2]
        children = np.stack([
            np.column_stack([c[:, 0], m01, m20]),
            np.column_stack([m01, c[:, 1], m12]),
            np.column_stack([m20, m12, c[:, 2]]),
            np.column_stack([m01, m12, m20]),
        ], axis=1).reshape(-1, 3)
    else:
        x0, x1, x2, x3 = c[:, 0], c[:, 1], c[:, 2], c[:, 3]
        x01, x02, x03, x12, x13, x23 = (m[:, k] for k in range(6))
        children = np.stack([
            np.column_stack([x0, x01, x02, x03]),
            np.column_stack([x01, x1, x12, x13]),
            np.column_stack([x02, x12, x2, x23]),
            np.column_stack([x03, x13, x23, x3]),
            np.column_stack([x01, x02, x03, x13]),
            np.column_stack([x12, x02, x01, x13]),
            np.column_stack([x02, x03, x13, x23]),
            np.column_stack([x13, x12, x02, x23]),
        ], axis=1).reshape(-1, 4)

    refined = SimplicialMesh(vertices, children, validate=False)
    _LOGGER.debug(f'Refined {mesh!r} -> {refined!r} ({len(edges)} edges split)')
    return refined
