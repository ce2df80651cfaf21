from typing import NamedTuple

import numpy as np

from ..exception import QpFailureError
from .kkt import KktResiduals
from .qp_status import QpStatus


class QpSolution(NamedTuple):
    primal: np.ndarray
    ineq_multipliers: np.ndarray
    eq_multipliers: np.ndarray
    status: QpStatus
    kkt: KktResiduals
    iterations: int = 0
    polished: bool = False

    @property
    def solved(self) -> bool:
        return self.status == QpStatus.SOLVED

    @property
    def max_multiplier(self) -> float:
        return float(self.ineq_multipliers.max()) if self.ineq_multipliers.size else 0.0

    def raise_for_status(self):
        if not self.solved:
            raise QpFailureError(self.status.stringify(),
                                 f'{self.iterations} iterations, max KKT residual {self.kkt.max():.3e}')
