from typing import Callable

import numpy as np

from ..exception import DimensionMismatchError, MeshMismatchError
from ..mesh import SimplicialMesh
from .quadrature import quadrature_rule


class ScalarFieldP1:
    """Continuous piecewise-linear scalar field, one coefficient per vertex."""

    def __init__(self, mesh: SimplicialMesh, values):
        values = np.array(values, dtype=float).reshape(-1)
        if values.size != mesh.num_vertices:
            raise DimensionMismatchError(f'scalar field needs {mesh.num_vertices} coefficients, got {values.size}')
        self.mesh = mesh
        self.values = values

    @classmethod
    def zeros(cls, mesh: SimplicialMesh) -> "ScalarFieldP1":
        return cls(mesh, np.zeros(mesh.num_vertices))

    @classmethod
    def interpolate(cls, mesh: SimplicialMesh, func: Callable[[np.ndarray], np.ndarray]) -> "ScalarFieldP1":
        return cls(mesh, np.broadcast_to(func(mesh.vertices), (mesh.num_vertices,)))

    def cell_gradients(self) -> np.ndarray:
        """Constant gradient on every cell, shape (cells, d)"""
        return np.einsum('ca,cad->cd', self.values[self.mesh.cells], self.mesh.gradients)

    def at_quadrature(self) -> np.ndarray:
        """Values at the quadrature points, shape (cells, q)"""
        bary, _ = quadrature_rule(self.mesh.dim)
        return self.values[self.mesh.cells] @ bary.T

    def on(self, mesh: SimplicialMesh) -> "ScalarFieldP1":
        """Same coefficients on a mesh with identical connectivity (e.g. a deformed copy)."""
        if mesh.num_vertices != self.mesh.num_vertices:
            raise MeshMismatchError('meshes have different vertex counts')
        return ScalarFieldP1(mesh, self.values)

    def _check(self, other: "ScalarFieldP1"):
        if not self.mesh.is_same(other.mesh):
            raise MeshMismatchError('scalar fields live on different meshes')

    def __add__(self, other: "ScalarFieldP1") -> "ScalarFieldP1":
        self._check(other)
        return ScalarFieldP1(self.mesh, self.values + other.values)

    def __sub__(self, other: "ScalarFieldP1") -> "ScalarFieldP1":
        self._check(other)
        return ScalarFieldP1(self.mesh, self.values - other.values)

    def __mul__(self, scalar: float) -> "ScalarFieldP1":
        return ScalarFieldP1(self.mesh, self.values * float(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "ScalarFieldP1":
        return ScalarFieldP1(self.mesh, -self.values)

    def __repr__(self) -> str:
        return f'ScalarFieldP1({self.mesh!r}, min={self.values.min():.4g}, max={self.values.max():.4g})'
