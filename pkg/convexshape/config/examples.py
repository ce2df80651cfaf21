"""Problem data of the reference experiments"""

import math
from typing import NamedTuple, Tuple

import numpy as np

from ..exception import DimensionMismatchError, InvalidParameterError
from ..expression import parse_expression
from ..fem import BoundaryCondition, ProblemSpec
from ..mesh import PrimitiveKind
from ..shapecalc import Integrand
from .const import FIVE_FOLD_COUNT, FIVE_FOLD_INNER_RADIUS, FIVE_FOLD_OUTER_RADIUS
from .problem_kind import ProblemKind

QUARTIC_SOURCE = "20*(x1 + 0.4 - x2^2)^2 + x1^2 + x2^2 - 1"
RADIAL_SOURCE_3D = "x1^2 + x2^2 + x3^2 - 1"
STATE_INTEGRAND = "u"


class ExampleProblem(NamedTuple):
    kind: ProblemKind
    f: str
    j: str
    bc: BoundaryCondition
    primitive: PrimitiveKind
    convexity: bool

    @property
    def dim(self) -> int:
        return 3 if self.primitive == PrimitiveKind.UNIT_CUBE_CENTERED else 2

    def problem_spec(self) -> ProblemSpec:
        return build_problem(self.f, self.j, self.bc, self.dim)


def five_fold_points(n: int = FIVE_FOLD_COUNT) -> Tuple[np.ndarray, np.ndarray]:
    """
    Points y_i on the unit circle at angles (i + 1/2) 2pi/n, which repel the optimal shape,
    and points z_i on radius 6/5 at angles i 2pi/n, which attract it; both as (sin, cos).
    """
    if n < 1:
        raise InvalidParameterError(f'need at least one point, got {n}')
    i = np.arange(n)
    y_angles = (i + 0.5) * 2 * math.pi / n
    z_angles = i * 2 * math.pi / n
    y = FIVE_FOLD_INNER_RADIUS * np.column_stack([np.sin(y_angles), np.cos(y_angles)])
    z = FIVE_FOLD_OUTER_RADIUS * np.column_stack([np.sin(z_angles), np.cos(z_angles)])
    return y, z


def _bump(point: np.ndarray) -> str:
    return f'exp(-8*((x1 - ({float(point[0])!r}))^2 + (x2 - ({float(point[1])!r}))^2))'


def five_fold_source(n: int = FIVE_FOLD_COUNT) -> str:
    """
    f = -1/2 + 4/5 |x|^2 + 2 sum exp(-8|x - y_i|^2) - sum exp(-8|x - z_i|^2).
    Large f raises u, so the bumps at y_i push the boundary away and the dips at z_i draw it in.
    """
    y, z = five_fold_points(n)
    repel = ' + '.join(f'2*{_bump(p)}' for p in y)
    attract = ' - '.join(_bump(p) for p in z)
    return f'-1/2 + 4/5*(x1^2 + x2^2) + {repel} - {attract}'


def source_function(text: str, dim: int):
    """(f, grad f) callables on points (n, d) from a formula in x1..xd."""
    expr = parse_expression(text)
    allowed = {f'x{k + 1}' for k in range(dim)}
    extra = [name for name in expr.free_variables if name not in allowed]
    if extra:
        raise DimensionMismatchError(
            f"source '{text}' may only use {', '.join(sorted(allowed))}, found {', '.join(extra)}")
    partials = [expr.derivative(f'x{k + 1}') for k in range(dim)]

    def bind(points: np.ndarray) -> dict:
        points = np.asarray(points, dtype=float)
        return {f'x{k + 1}': points[..., k] for k in range(dim)}

    def rhs(points: np.ndarray) -> np.ndarray:
        return expr.evaluate(**bind(points))

    def rhs_gradient(points: np.ndarray) -> np.ndarray:
        values = bind(points)
        return np.stack([p.evaluate(**values) for p in partials], axis=-1)

    return rhs, rhs_gradient


def build_problem(f: str, j: str, bc: BoundaryCondition, dim: int) -> ProblemSpec:
    rhs, rhs_gradient = source_function(f, dim)
    return ProblemSpec(rhs=rhs, integrand=Integrand.from_expression(j, dim), bc=bc, dim=dim, rhs_gradient=rhs_gradient)


def example_problem(kind: ProblemKind) -> ExampleProblem:
    if kind == ProblemKind.EXAMPLE1:
        return ExampleProblem(kind, QUARTIC_SOURCE, STATE_INTEGRAND, BoundaryCondition.DIRICHLET_ZERO,
                              PrimitiveKind.UNIT_DISK, True)
    if kind == ProblemKind.EXAMPLE2:
        # same objective as example1, only the source changes
        return ExampleProblem(kind, five_fold_source(), STATE_INTEGRAND, BoundaryCondition.DIRICHLET_ZERO,
                              PrimitiveKind.UNIT_DISK, True)
    if kind in (ProblemKind.EXAMPLE3_CONVEX, ProblemKind.EXAMPLE3_UNCONSTRAINED):
        return ExampleProblem(kind, RADIAL_SOURCE_3D, STATE_INTEGRAND, BoundaryCondition.NEUMANN_REACTION,
                              PrimitiveKind.UNIT_CUBE_CENTERED, kind == ProblemKind.EXAMPLE3_CONVEX)
    raise InvalidParameterError(f'{kind.value} is not a built-in example')
