from typing import Callable, Optional

import numpy as np

from ..exception import DimensionMismatchError, MissingPartialError
from ..expression import Expression, parse_expression

# j(x, u, g) with x (n, d), u (n,), g (n, d)
IntegrandFunction = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


class Integrand:
    """
    Objective density j(x, u, g) and its partial derivatives.

    value and du return (n,) arrays, dx and dv return (n, d) arrays.
    """

    def __init__(
        self,
        value: IntegrandFunction,
        dx: Optional[IntegrandFunction] = None,
        du: Optional[IntegrandFunction] = None,
        dv: Optional[IntegrandFunction] = None,
        dim: int = 2,
        name: str = "",
    ):
        self.value = value
        self._dx = dx
        self._du = du
        self._dv = dv
        self.dim = dim
        self.name = name or getattr(value, '__name__', 'j')

    def __repr__(self) -> str:
        return f"Integrand('{self.name}', dim={self.dim})"

    def _partial(self, func: Optional[IntegrandFunction], name: str) -> IntegrandFunction:
        if func is None:
            raise MissingPartialError(name)
        return func

    @property
    def dx(self) -> IntegrandFunction:
        return self._partial(self._dx, 'j_x')

    @property
    def du(self) -> IntegrandFunction:
        return self._partial(self._du, 'j_u')

    @property
    def dv(self) -> IntegrandFunction:
        return self._partial(self._dv, 'j_v')

    def require_partials(self):
        for name in ('dx', 'du', 'dv'):
            getattr(self, name)

    @classmethod
    def from_expression(cls, text: str, dim: int) -> "Integrand":
        """Build j and all partials symbolically from a formula in x1..xd, u, g1..gd."""
        expr = parse_expression(text)
        allowed = {f'x{k + 1}' for k in range(dim)} | {f'g{k + 1}' for k in range(dim)} | {'u'}
        extra = [name for name in expr.free_variables if name not in allowed]
        if extra:
            raise DimensionMismatchError(f"'{text}' uses {', '.join(extra)} in a {dim}D problem")

        x_partials = [expr.derivative(f'x{k + 1}') for k in range(dim)]
        g_partials = [expr.derivative(f'g{k + 1}') for k in range(dim)]
        u_partial = expr.derivative('u')

        return cls(
            value=_scalar(expr, dim),
            dx=_vector(x_partials, dim),
            du=_scalar(u_partial, dim),
            dv=_vector(g_partials, dim),
            dim=dim,
            name=text,
        )

    def check_consistency(self, rng: np.random.Generator, samples: int = 20, step: float = 1e-5) -> float:
        """
        Max relative deviation between the partials and central differences of
        the value at random points in [-1, 1].
        """
        d = self.dim
        x = rng.uniform(-1.0, 1.0, (samples, d))
        u = rng.uniform(-1.0, 1.0, samples)
        g = rng.uniform(-1.0, 1.0, (samples, d))

        def central(dx=0.0, du=0.0, dg=0.0):
            plus = self.value(x + dx, u + du, g + dg)
            minus = self.value(x - dx, u - du, g - dg)
            return (np.asarray(plus) - np.asarray(minus)) / (2 * step)

        worst = 0.0
        fd_u = central(du=step)
        worst = max(worst, _relative(fd_u, self.du(x, u, g)))
        analytic_x = np.asarray(self.dx(x, u, g))
        analytic_v = np.asarray(self.dv(x, u, g))
        for k in range(d):
            e = np.zeros(d)
            e[k] = step
            worst = max(worst, _relative(central(dx=e), analytic_x[:, k]))
            worst = max(worst, _relative(central(dg=e), analytic_v[:, k]))
        return worst


def _relative(approx: np.ndarray, exact: np.ndarray) -> float:
    exact = np.asarray(exact, dtype=float)
    return float(np.max(np.abs(approx - exact) / np.maximum(1.0, np.abs(exact))))


def _bind(expr: Expression, dim: int, x: np.ndarray, u: np.ndarray, g: np.ndarray) -> np.ndarray:
    values = {'u': u}
    for k in range(dim):
        values[f'x{k + 1}'] = x[:, k]
        values[f'g{k + 1}'] = g[:, k]
    return np.broadcast_to(expr.evaluate(**values), np.shape(u))


def _scalar(expr: Expression, dim: int) -> IntegrandFunction:
    def evaluate(x, u, g):
        return _bind(expr, dim, x, u, g)
    evaluate.__name__ = expr.text
    return evaluate


def _vector(exprs, dim: int) -> IntegrandFunction:
    def evaluate(x, u, g):
        return np.stack([_bind(e, dim, x, u, g) for e in exprs], axis=-1)
    return evaluate
