from dataclasses import dataclass, field

from ..deform import ElasticityParams, QpStrategy
from ..exception import InvalidParameterError
from ..fem import STATE_TOLERANCE
from ..qp import QpSettings
from .const import (
    DEFAULT_BETA, DEFAULT_BETA_M, DEFAULT_EPS_TOL, DEFAULT_MAX_OUTER, DEFAULT_PENALTY, DEFAULT_SIGMA, DEFAULT_T0,
    MAX_BACKTRACKS, MAX_PENALTY_INCREASES
)


@dataclass(frozen=True)
class AlgorithmParams:
    t0: float = DEFAULT_T0
    beta: float = DEFAULT_BETA
    sigma: float = DEFAULT_SIGMA
    M: float = DEFAULT_PENALTY
    beta_M: float = DEFAULT_BETA_M
    eps_tol: float = DEFAULT_EPS_TOL
    max_outer: int = DEFAULT_MAX_OUTER
    max_backtracks: int = MAX_BACKTRACKS
    max_penalty_increases: int = MAX_PENALTY_INCREASES
    state_tol: float = STATE_TOLERANCE
    convexity: bool = True
    elasticity: ElasticityParams = field(default_factory=ElasticityParams)
    qp: QpSettings = field(default_factory=QpSettings)
    strategy: QpStrategy = QpStrategy.COUPLED

    def __post_init__(self):
        if not self.t0 > 0:
            raise InvalidParameterError(f't0 must be positive, got {self.t0}')
        if not 0 < self.beta < 1:
            raise InvalidParameterError(f'beta must be in (0, 1), got {self.beta}')
        if not 0 < self.sigma < 1:
            raise InvalidParameterError(f'sigma must be in (0, 1), got {self.sigma}')
        if not self.M >= 0:
            raise InvalidParameterError(f'M must be non-negative, got {self.M}')
        if not self.beta_M > 1:
            raise InvalidParameterError(f'beta_M must exceed 1, got {self.beta_M}')
        if not self.eps_tol > 0 or not self.state_tol > 0:
            raise InvalidParameterError('eps_tol and state_tol must be positive')
        if self.max_outer < 1 or self.max_backtracks < 0 or self.max_penalty_increases < 0:
            raise InvalidParameterError('iteration limits must be non-negative (max_outer at least 1)')
