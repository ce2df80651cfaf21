from typing import TYPE_CHECKING, Callable

import numpy as np

from ..exception import DimensionMismatchError, MeshMismatchError

if TYPE_CHECKING:
    from .simplicial_mesh import SimplicialMesh


class VectorFieldP1:
    """Continuous piecewise-linear vector field, d coefficients per vertex."""

    def __init__(self, mesh: "SimplicialMesh", coefficients):
        values = np.array(coefficients, dtype=float)
        if values.size != mesh.num_vertices * mesh.dim:
            raise DimensionMismatchError(
                f'vector field needs {mesh.num_vertices * mesh.dim} coefficients, got {values.size}')
        self.mesh = mesh
        self.values = values.reshape(mesh.num_vertices, mesh.dim)

    @classmethod
    def zeros(cls, mesh: "SimplicialMesh") -> "VectorFieldP1":
        return cls(mesh, np.zeros((mesh.num_vertices, mesh.dim)))

    @classmethod
    def from_function(cls, mesh: "SimplicialMesh", func: Callable[[np.ndarray], np.ndarray]) -> "VectorFieldP1":
        """Nodal interpolation of a vectorized function (n, d) -> (n, d)"""
        return cls(mesh, np.broadcast_to(func(mesh.vertices), mesh.vertices.shape))

    @property
    def flat(self) -> np.ndarray:
        """Coefficients in vertex-major order: index d*i + alpha"""
        return self.values.reshape(-1)

    def jacobians(self) -> np.ndarray:
        """Per-cell constant Jacobian DV, shape (cells, d, d) with DV[c, alpha, beta] = d V_alpha / d x_beta"""
        local = self.values[self.mesh.cells]
        return np.einsum('cak,cal->ckl', local, self.mesh.gradients)

    def divergence(self) -> np.ndarray:
        return np.trace(self.jacobians(), axis1=1, axis2=2)

    def _check(self, other: "VectorFieldP1"):
        if not self.mesh.is_same(other.mesh):
            raise MeshMismatchError('vector fields live on different meshes')

    def __add__(self, other: "VectorFieldP1") -> "VectorFieldP1":
        self._check(other)
        return VectorFieldP1(self.mesh, self.values + other.values)

    def __sub__(self, other: "VectorFieldP1") -> "VectorFieldP1":
        self._check(other)
        return VectorFieldP1(self.mesh, self.values - other.values)

    def __mul__(self, scalar: float) -> "VectorFieldP1":
        return VectorFieldP1(self.mesh, self.values * float(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "VectorFieldP1":
        return VectorFieldP1(self.mesh, -self.values)

    def __repr__(self) -> str:
        return f'VectorFieldP1({self.mesh!r}, max={np.abs(self.values).max(initial=0.0):.3e})'
