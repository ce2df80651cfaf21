import logging
from typing import TYPE_CHECKING, NamedTuple, Optional

import numpy as np
from bidict import bidict

from ..exception import BoundaryTopologyError

if TYPE_CHECKING:
    from .simplicial_mesh import SimplicialMesh

_LOGGER = logging.getLogger(__name__)


class BoundaryTopology(NamedTuple):
    """
    Boundary facets of a mesh with outward orientation.

    In 2D `boundary_vertices` is the counterclockwise loop, in 3D it is the
    sorted set of boundary vertices.  `boundary_index` maps a vertex id to its
    position in `boundary_vertices` (and back via `.inverse`).
    """
    facets: np.ndarray
    facet_cells: np.ndarray
    boundary_vertices: np.ndarray
    loop: Optional[np.ndarray]
    facet_normals: np.ndarray
    facet_measures: np.ndarray
    boundary_index: bidict
    outer_edges: Optional[np.ndarray] = None

    @property
    def num_facets(self) -> int:
        return self.facets.shape[0]

    @property
    def num_boundary_vertices(self) -> int:
        return self.boundary_vertices.shape[0]

    def positions(self, vertex_ids) -> np.ndarray:
        """Boundary numbering of the given vertex ids"""
        return np.fromiter((self.boundary_index[int(v)] for v in np.ravel(vertex_ids)), dtype=np.int64)


def extract_boundary(mesh: "SimplicialMesh") -> BoundaryTopology:
    """Facets that belong to exactly one cell, with outward unit normals and measures."""
    oriented, inverse, counts = mesh.facet_counts()
    on_boundary = counts[inverse] == 1
    facets = oriented[on_boundary]
    facet_cells = np.flatnonzero(on_boundary) // (mesh.dim + 1)

    x = mesh.vertices
    if mesh.dim == 2:
        tangent = x[facets[:, 1]] - x[facets[:, 0]]
        measures = np.linalg.norm(tangent, axis=1)
        normals = np.column_stack([tangent[:, 1], -tangent[:, 0]]) / measures[:, None]
        loop = _boundary_loop(x, facets)
        boundary_vertices = loop
        outer_edges = None
    else:
        cross = np.cross(x[facets[:, 1]] - x[facets[:, 0]], x[facets[:, 2]] - x[facets[:, 0]])
        area2 = np.linalg.norm(cross, axis=1)
        measures = area2 / 2.0
        normals = cross / area2[:, None]
        loop = None
        boundary_vertices = np.unique(facets)
        outer_edges = _outer_edges(facets)

    boundary_index = bidict((int(v), i) for i, v in enumerate(boundary_vertices))
    _LOGGER.debug(f'Extracted {len(facets)} boundary facets, {len(boundary_vertices)} boundary vertices')
    return BoundaryTopology(
        facets=facets,
        facet_cells=facet_cells,
        boundary_vertices=boundary_vertices,
        loop=loop,
        facet_normals=normals,
        facet_measures=measures,
        boundary_index=boundary_index,
        outer_edges=outer_edges,
    )


def _boundary_loop(x: np.ndarray, facets: np.ndarray) -> np.ndarray:
    """Chain the directed boundary edges a -> b into a single counterclockwise loop."""
    successor = {}
    for a, b in facets:
        a, b = int(a), int(b)
        if a in successor:
            raise BoundaryTopologyError(f'boundary vertex {a} has more than one outgoing boundary edge')
        successor[a] = b

    start = min(successor)
    loop = [start]
    current = successor[start]
    while current != start:
        if current not in successor:
            raise BoundaryTopologyError(f'boundary is not closed at vertex {current}')
        loop.append(current)
        if len(loop) > len(successor):
            raise BoundaryTopologyError('boundary edges do not form a cycle')
        current = successor[current]

    if len(loop) != len(successor):
        raise BoundaryTopologyError(
            f'boundary consists of more than one loop ({len(loop)} of {len(successor)} edges reached)')

    loop = np.array(loop, dtype=np.int64)
    px, py = x[loop, 0], x[loop, 1]
    area = 0.5 * float(np.sum(px * np.roll(py, -1) - np.roll(px, -1) * py))
    if area <= 0:
        raise BoundaryTopologyError(f'boundary loop is not counterclockwise (signed area {area:g})')
    return loop


def _outer_edges(facets: np.ndarray) -> np.ndarray:
    """
    Rows (i, j, l, r) per boundary edge with i < j, where l is the opposite vertex
    of the boundary triangle traversing i -> j and r the one traversing j -> i.
    """
    opposite = {}
    for a, b, c in facets:
        a, b, c = int(a), int(b), int(c)
        opposite[(a, b)] = c
        opposite[(b, c)] = a
        opposite[(c, a)] = b

    rows = []
    for (i, j), l in opposite.items():
        if i > j:
            continue
        r = opposite.get((j, i))
        if r is None:
            raise BoundaryTopologyError(f'boundary edge ({i}, {j}) is not shared by two boundary triangles')
        rows.append((i, j, l, r))
    rows.sort()
    return np.array(rows, dtype=np.int64).reshape(-1, 4)
