from functools import cached_property
from typing import Tuple

import numpy as np
import sympy

from ..exception import InvalidParameterError, UnknownIdentifierError
from .const import VARIABLES
from .parser import SYMBOLS, Parser


class Expression:
    """
    Parsed formula over x1..x3, u and g1..g3.

    Evaluation is vectorized through numpy; derivatives are symbolic and
    return new expressions, so higher derivatives are available as well.
    """

    def __init__(self, sym: sympy.Expr, text: str = ""):
        self.sym = sym
        self.text = text or str(sym)

    def __repr__(self) -> str:
        return f"Expression('{self.text}')"

    def __str__(self) -> str:
        return self.text

    @property
    def free_variables(self) -> Tuple[str, ...]:
        used = {s.name for s in self.sym.free_symbols}
        return tuple(name for name in VARIABLES if name in used)

    @cached_property
    def _function(self):
        return sympy.lambdify([SYMBOLS[name] for name in VARIABLES], self.sym, modules='numpy')

    def evaluate(self, **values) -> np.ndarray:
        """
        Evaluate with numpy arrays (or scalars) bound to variable names.
        The result is broadcast to the common shape of the arguments.
        """
        unknown = set(values) - set(VARIABLES)
        if unknown:
            name = sorted(unknown)[0]
            raise UnknownIdentifierError(name, -1, self.text)
        missing = [name for name in self.free_variables if name not in values]
        if missing:
            raise InvalidParameterError(f"expression '{self.text}' needs a value for {', '.join(missing)}")
        arrays = [np.asarray(values.get(name, 0.0), dtype=float) for name in VARIABLES]
        shape = np.broadcast_shapes(*(a.shape for a in arrays))
        with np.errstate(all='ignore'):
            result = self._function(*arrays)
        return np.broadcast_to(np.asarray(result, dtype=float), shape).copy()

    def __call__(self, **values) -> np.ndarray:
        return self.evaluate(**values)

    def derivative(self, name: str) -> "Expression":
        if name not in VARIABLES:
            raise UnknownIdentifierError(name, -1, self.text)
        sym = sympy.diff(self.sym, SYMBOLS[name])
        return Expression(sym, f"d/d{name}({self.text})")

    def is_constant(self) -> bool:
        return not self.sym.free_symbols


def parse_expression(text: str) -> Expression:
    """Parse text with standard precedence (^ over unary minus over * / over + -)."""
    return Expression(Parser(text).parse(), text)
