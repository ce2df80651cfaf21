import logging
from typing import Callable, NamedTuple, Optional

from ..exception import InvalidParameterError, StepFailureError
from .const import MAX_BACKTRACKS

_LOGGER = logging.getLogger(__name__)


class ArmijoStep(NamedTuple):
    k: int
    t: float
    value: float


def armijo_search(
    merit: Callable[[float], float],
    phi0: float,
    slope: float,
    t_init: float,
    beta: float,
    sigma: float,
    quality: Optional[Callable[[float], bool]] = None,
    max_backtracks: int = MAX_BACKTRACKS,
) -> ArmijoStep:
    """
    Smallest k >= 0 such that t = t_init beta^k passes the quality check and
    merit(t) <= phi0 + sigma t slope. The merit is only evaluated at steps that pass the quality check.
    """
    if not slope < 0:
        raise InvalidParameterError(f'line search needs a descent slope, got {slope}')
    vetoed = 0
    last = None
    for k in range(max_backtracks + 1):
        t = t_init * beta ** k
        if quality is not None and not quality(t):
            vetoed += 1
            continue
        value = merit(t)
        last = value
        if value <= phi0 + sigma * t * slope:
            _LOGGER.debug(f'Armijo accepted k={k}, t={t:.6g}, phi={value:.10g} ({vetoed} quality vetoes)')
            return ArmijoStep(k, t, value)
    raise StepFailureError(
        max_backtracks,
        f'{vetoed} steps vetoed by mesh quality, last merit {last}, phi0 {phi0:.10g}, slope {slope:.3e}')
