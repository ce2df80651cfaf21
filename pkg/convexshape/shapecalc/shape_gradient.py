import numpy as np

from ..exception import DimensionMismatchError, MeshMismatchError
from ..mesh import SimplicialMesh, VectorFieldP1


class ShapeGradient:
    """Coefficients of the linear functional V -> J_h'(Omega_h; V), d per vertex."""

    def __init__(self, mesh: SimplicialMesh, values):
        values = np.array(values, dtype=float)
        if values.size != mesh.num_vertices * mesh.dim:
            raise DimensionMismatchError(
                f'shape gradient needs {mesh.num_vertices * mesh.dim} coefficients, got {values.size}')
        self.mesh = mesh
        self.values = values.reshape(mesh.num_vertices, mesh.dim)

    @property
    def flat(self) -> np.ndarray:
        return self.values.reshape(-1)

    def __repr__(self) -> str:
        return f'ShapeGradient({self.mesh!r}, norm={np.linalg.norm(self.values):.3e})'


def pair(grad: ShapeGradient, V: VectorFieldP1) -> float:
    if not grad.mesh.is_same(V.mesh):
        raise MeshMismatchError('shape gradient and direction live on different meshes')
    return float(np.sum(grad.values * V.values))
