import logging

from ..exception import MeshMismatchError, MeshQualityError
from .quality import deformation_quality
from .simplicial_mesh import SimplicialMesh
from .vector_field import VectorFieldP1

_LOGGER = logging.getLogger(__name__)


def apply_deformation(mesh: SimplicialMesh, V: VectorFieldP1, t: float) -> SimplicialMesh:
    """Move every vertex x_i to x_i + t V(x_i); refuses steps that fail the quality check."""
    if not mesh.is_same(V.mesh):
        raise MeshMismatchError('deformation field does not live on the mesh')
    if t == 0:
        return mesh
    report = deformation_quality(mesh, V, t)
    if not report.passed:
        raise MeshQualityError(report, t)
    return mesh.with_vertices(mesh.vertices + t * V.values)
