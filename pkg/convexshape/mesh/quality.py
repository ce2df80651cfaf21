from typing import NamedTuple

import numpy as np

from ..exception import MeshMismatchError
from .const import QUALITY_MAX_DET, QUALITY_MAX_NORM, QUALITY_MIN_DET
from .simplicial_mesh import SimplicialMesh
from .vector_field import VectorFieldP1


class QualityReport(NamedTuple):
    min_det: float
    max_det: float
    max_norm: float
    passed: bool


def deformation_quality(mesh: SimplicialMesh, V: VectorFieldP1, t: float) -> QualityReport:
    """
    Evaluate det(I + t DV) and the spectral norm of t DV on every cell.
    The report passes iff 1/2 <= det <= 2 and ||t DV|| <= 0.3 everywhere.
    """
    if not mesh.is_same(V.mesh):
        raise MeshMismatchError('deformation field does not live on the mesh')
    tdv = t * V.jacobians()
    dets = np.linalg.det(np.eye(mesh.dim)[None, :, :] + tdv)
    norms = np.linalg.norm(tdv, ord=2, axis=(1, 2))
    min_det, max_det, max_norm = float(dets.min()), float(dets.max()), float(norms.max())
    passed = min_det >= QUALITY_MIN_DET and max_det <= QUALITY_MAX_DET and max_norm <= QUALITY_MAX_NORM
    return QualityReport(min_det, max_det, max_norm, bool(passed))
