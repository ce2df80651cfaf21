"""Simplicial mesh data model"""

import logging
import math
from functools import cached_property
from typing import TYPE_CHECKING, Tuple

import numpy as np
from scipy.spatial.distance import pdist

from ..exception import DegenerateCellError, DimensionMismatchError, NonConformingMeshError
from .const import DEGENERATE_VOLUME_TOLERANCE, LOCAL_FACETS

if TYPE_CHECKING:
    from .boundary_topology import BoundaryTopology

_LOGGER = logging.getLogger(__name__)


def signed_volumes(vertices: np.ndarray, cells: np.ndarray) -> np.ndarray:
    """Signed volume of every cell, positive for counterclockwise / right-handed ordering."""
    dim = vertices.shape[1]
    edges = vertices[cells[:, 1:]] - vertices[cells[:, [0]]]
    return np.linalg.det(edges) / math.factorial(dim)


def orient_cells(vertices: np.ndarray, cells: np.ndarray) -> np.ndarray:
    """
    Return a copy of `cells` where every negatively oriented cell has its first
    two vertices swapped.  Zero-volume cells raise DegenerateCellError.
    """
    cells = np.array(cells, dtype=np.int64, copy=True)
    vols = signed_volumes(vertices, cells)
    scale = _volume_scale(vertices)
    flat = np.flatnonzero(np.abs(vols) <= DEGENERATE_VOLUME_TOLERANCE * scale)
    if flat.size:
        raise DegenerateCellError(int(flat[0]), float(vols[flat[0]]))
    flip = vols < 0
    if flip.any():
        _LOGGER.debug(f'Reorienting {int(flip.sum())} cells')
        cells[flip, 0], cells[flip, 1] = cells[flip, 1], cells[flip, 0].copy()
    return cells


def _volume_scale(vertices: np.ndarray) -> float:
    extent = float(np.max(np.ptp(vertices, axis=0))) if len(vertices) else 1.0
    return max(extent, 1e-300) ** vertices.shape[1]


class SimplicialMesh:
    """
    Conforming mesh of triangles (d=2) or tetrahedra (d=3).

    Vertices and cells are stored as read-only numpy arrays; every derived
    geometric quantity is computed once and cached, so a mesh can be shared
    freely between threads once constructed.
    """

    def __init__(self, vertices, cells, validate: bool = True):
        vertices = np.array(vertices, dtype=float)
        cells = np.array(cells, dtype=np.int64)
        if vertices.ndim != 2 or vertices.shape[1] not in (2, 3):
            raise DimensionMismatchError(f'vertices must have shape (n, 2) or (n, 3), got {vertices.shape}')
        dim = vertices.shape[1]
        if cells.ndim != 2 or cells.shape[1] != dim + 1:
            raise DimensionMismatchError(f'cells must have shape (n, {dim + 1}), got {cells.shape}')
        vertices.setflags(write=False)
        cells.setflags(write=False)
        self._vertices = vertices
        self._cells = cells
        if validate:
            self.validate()

    def __repr__(self) -> str:
        return f'SimplicialMesh(dim={self.dim}, vertices={self.num_vertices}, cells={self.num_cells})'

    @property
    def dim(self) -> int:
        return self._vertices.shape[1]

    @property
    def vertices(self) -> np.ndarray:
        return self._vertices

    @property
    def cells(self) -> np.ndarray:
        return self._cells

    @property
    def num_vertices(self) -> int:
        return self._vertices.shape[0]

    @property
    def num_cells(self) -> int:
        return self._cells.shape[0]

    @cached_property
    def signed_volumes(self) -> np.ndarray:
        return signed_volumes(self._vertices, self._cells)

    @property
    def volumes(self) -> np.ndarray:
        return np.abs(self.signed_volumes)

    @property
    def total_volume(self) -> float:
        return float(self.volumes.sum())

    @cached_property
    def gradients(self) -> np.ndarray:
        """
        Gradients of the barycentric hat functions, shape (cells, d+1, d).
        Row a of cell c is the (constant) gradient of the hat function of
        local vertex a on that cell.
        """
        edges = self._vertices[self._cells[:, 1:]] - self._vertices[self._cells[:, [0]]]
        inv = np.linalg.inv(edges)
        grads = np.empty((self.num_cells, self.dim + 1, self.dim))
        grads[:, 1:, :] = np.transpose(inv, (0, 2, 1))
        grads[:, 0, :] = -grads[:, 1:, :].sum(axis=1)
        return grads

    @cached_property
    def boundary(self) -> "BoundaryTopology":
        from .boundary_topology import extract_boundary
        return extract_boundary(self)

    @property
    def bounds(self) -> Tuple[np.ndarray, np.ndarray]:
        return self._vertices.min(axis=0), self._vertices.max(axis=0)

    @cached_property
    def diameter(self) -> float:
        pts = self._vertices[self.boundary.boundary_vertices]
        if len(pts) < 2:
            return 0.0
        return float(pdist(pts).max())

    def with_vertices(self, vertices: np.ndarray) -> "SimplicialMesh":
        """New mesh with the same connectivity and moved vertices; orientation is re-checked."""
        vertices = np.asarray(vertices, dtype=float)
        if vertices.shape != self._vertices.shape:
            raise DimensionMismatchError(f'expected vertices of shape {self._vertices.shape}, got {vertices.shape}')
        moved = SimplicialMesh(vertices, self._cells, validate=False)
        vols = moved.signed_volumes
        bad = np.flatnonzero(vols <= 0)
        if bad.size:
            raise DegenerateCellError(int(bad[0]), float(vols[bad[0]]), "cell inverted by deformation")
        return moved

    def is_same(self, other: "SimplicialMesh") -> bool:
        if other is self:
            return True
        return (
            other.num_vertices == self.num_vertices
            and np.array_equal(other.cells, self._cells)
            and np.array_equal(other.vertices, self._vertices)
        )

    def facet_counts(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        All oriented cell facets, the unique (sorted) facets and how often each occurs.
        :return: (oriented facets, index of the unique facet per oriented facet, counts)
        """
        local = np.array(LOCAL_FACETS[self.dim])
        oriented = self._cells[:, local].reshape(-1, self.dim)
        _, inverse, counts = np.unique(np.sort(oriented, axis=1), axis=0, return_inverse=True, return_counts=True)
        return oriented, inverse.reshape(-1), counts

    def validate(self):
        """Check the conforming-mesh invariants, raising on the first violation."""
        nv = self.num_vertices
        if self.num_cells == 0:
            raise NonConformingMeshError('mesh has no cells')
        if self._cells.min() < 0 or self._cells.max() >= nv:
            raise NonConformingMeshError(f'vertex index out of range [0, {nv})')
        used = np.zeros(nv, dtype=bool)
        used[self._cells.reshape(-1)] = True
        if not used.all():
            raise NonConformingMeshError(f'vertex {int(np.flatnonzero(~used)[0])} is not used by any cell')
        if np.any(np.diff(np.sort(self._cells, axis=1), axis=1) == 0):
            raise NonConformingMeshError('a cell references the same vertex twice')

        vols = self.signed_volumes
        scale = _volume_scale(self._vertices)
        bad = np.flatnonzero(vols <= DEGENERATE_VOLUME_TOLERANCE * scale)
        if bad.size:
            raise DegenerateCellError(int(bad[0]), float(vols[bad[0]]), "cell is degenerate or negatively oriented")

        oriented, inverse, counts = self.facet_counts()
        shared = np.flatnonzero(counts > 2)
        if shared.size:
            facet = oriented[np.flatnonzero(inverse == shared[0])[0]]
            raise NonConformingMeshError(f'facet {tuple(sorted(int(v) for v in facet))} is shared by {int(counts[shared[0]])} cells')
