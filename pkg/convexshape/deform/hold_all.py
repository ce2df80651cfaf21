from typing import Sequence

import numpy as np

from ..exception import DimensionMismatchError
from ..mesh import SimplicialMesh


def hold_all_violation(mesh: SimplicialMesh, lower: Sequence[float], upper: Sequence[float]) -> float:
    """Largest distance by which a vertex leaves the box [lower, upper]; 0 when contained."""
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    if lower.shape != (mesh.dim,) or upper.shape != (mesh.dim,):
        raise DimensionMismatchError(f'hold-all box must have {mesh.dim} bounds per side')
    below = lower - mesh.vertices
    above = mesh.vertices - upper
    return float(max(0.0, below.max(), above.max()))
