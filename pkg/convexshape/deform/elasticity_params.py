from dataclasses import dataclass

from ..exception import InvalidParameterError
from .const import DEFAULT_DELTA, DEFAULT_LAMBDA, DEFAULT_MU


@dataclass(frozen=True)
class ElasticityParams:
    mu: float = DEFAULT_MU
    lam: float = DEFAULT_LAMBDA
    delta: float = DEFAULT_DELTA

    def __post_init__(self):
        if not self.mu > 0:
            raise InvalidParameterError(f'mu must be positive, got {self.mu}')
        if not self.lam >= 0:
            raise InvalidParameterError(f'lambda must be non-negative, got {self.lam}')
        if not self.delta > 0:
            raise InvalidParameterError(f'delta must be positive, got {self.delta}')
