from dataclasses import dataclass

from ..exception import InvalidParameterError
from .const import (
    ADAPTIVE_RHO_INTERVAL, POLISH_REFINE_ITER, QP_ALPHA, QP_MAX_ITER, QP_RHO, QP_SIGMA, QP_TOLERANCE, SCALING_ITER
)


@dataclass(frozen=True)
class QpSettings:
    tol: float = QP_TOLERANCE
    max_iter: int = QP_MAX_ITER
    rho: float = QP_RHO
    sigma: float = QP_SIGMA
    alpha: float = QP_ALPHA
    scaling_iter: int = SCALING_ITER
    adaptive_rho_interval: int = ADAPTIVE_RHO_INTERVAL
    polish: bool = True
    polish_refine_iter: int = POLISH_REFINE_ITER

    def __post_init__(self):
        if not self.tol > 0:
            raise InvalidParameterError(f'QP tolerance must be positive, got {self.tol}')
        if self.max_iter < 1:
            raise InvalidParameterError(f'QP max_iter must be at least 1, got {self.max_iter}')
        if not self.rho > 0 or not self.sigma > 0:
            raise InvalidParameterError('QP rho and sigma must be positive')
        if not 0 < self.alpha < 2:
            raise InvalidParameterError(f'QP relaxation alpha must be in (0, 2), got {self.alpha}')
        if self.scaling_iter < 0 or self.adaptive_rho_interval < 1:
            raise InvalidParameterError('QP scaling_iter must be >= 0 and adaptive_rho_interval >= 1')
