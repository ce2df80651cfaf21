"""
Penalty merit function phi(t) = J_h(X + tV) + M sum_i [C_i(X + tV)]^+ and its slope at t = 0
"""

import logging
from typing import NamedTuple, Optional, Tuple, Union

import numpy as np

from ..convexity import ConstraintSystem, constraint_values
from ..exception import DescentFailureError, DimensionMismatchError
from ..fem import STATE_TOLERANCE, ProblemSpec, ScalarFieldP1, solve_state
from ..mesh import SimplicialMesh, VectorFieldP1, apply_deformation
from ..shapecalc import evaluate_objective
from .algorithm_params import AlgorithmParams

_LOGGER = logging.getLogger(__name__)


class MeritEvaluation(NamedTuple):
    value: float
    objective: float
    violation: float
    mesh: SimplicialMesh
    state: ScalarFieldP1


def constraint_violation(mesh: SimplicialMesh) -> float:
    """Sum of the positive parts of the exact convexity constraints"""
    values = constraint_values(mesh).values
    return float(np.maximum(values, 0.0).sum())


def merit_at(
    mesh: SimplicialMesh,
    M: float,
    problem: ProblemSpec,
    tol: float = STATE_TOLERANCE,
    state_guess: Optional[np.ndarray] = None,
    convexity: bool = True,
) -> MeritEvaluation:
    u = solve_state(mesh, problem, tol, x0=state_guess)
    objective = evaluate_objective(mesh, u, problem.integrand)
    violation = constraint_violation(mesh) if convexity else 0.0
    return MeritEvaluation(objective + M * violation, objective, violation, mesh, u)


def merit_evaluation(
    mesh: SimplicialMesh,
    V: VectorFieldP1,
    t: float,
    M: float,
    problem: ProblemSpec,
    tol: float = STATE_TOLERANCE,
    state_guess: Optional[np.ndarray] = None,
    convexity: bool = True,
) -> MeritEvaluation:
    """Deform, re-solve the state and evaluate phi(t). Raises MeshQualityError when the step fails the quality check."""
    deformed = apply_deformation(mesh, V, t)
    return merit_at(deformed, M, problem, tol, state_guess, convexity)


def merit_value(
    mesh: SimplicialMesh,
    V: VectorFieldP1,
    t: float,
    M: float,
    problem: ProblemSpec,
    tol: float = STATE_TOLERANCE,
    state_guess: Optional[np.ndarray] = None,
    convexity: bool = True,
) -> float:
    return merit_evaluation(mesh, V, t, M, problem, tol, state_guess, convexity).value


def _direction_values(V: Union[VectorFieldP1, np.ndarray]) -> np.ndarray:
    return V.flat if isinstance(V, VectorFieldP1) else np.asarray(V, dtype=float).reshape(-1)


def merit_slope(grad_pair: float, constraints: Optional[ConstraintSystem], V: Union[VectorFieldP1, np.ndarray],
                M: float) -> float:
    """phi'(0) = J_h'(V) + M sum over violated i of DC_i V"""
    if constraints is None or not constraints.count:
        return float(grad_pair)
    violated = constraints.violated()
    if not violated.any():
        return float(grad_pair)
    if constraints.jacobian is None:
        raise DimensionMismatchError('merit slope needs the constraint jacobian')
    v = _direction_values(V)
    if v.size != constraints.jacobian.shape[1]:
        raise DimensionMismatchError(f'direction has {v.size} entries, jacobian has {constraints.jacobian.shape[1]}')
    linearized = constraints.jacobian @ v
    return float(grad_pair + M * linearized[violated].sum())


def ensure_descent(
    grad_pair: float,
    constraints: Optional[ConstraintSystem],
    V: Union[VectorFieldP1, np.ndarray],
    M: float,
    params: AlgorithmParams,
) -> Tuple[float, float]:
    """Smallest M * beta_M^j, j >= 0, with phi'(0) < 0. Returns (M, slope)."""
    penalty = M
    slope = merit_slope(grad_pair, constraints, V, penalty)
    for j in range(params.max_penalty_increases + 1):
        if j:
            penalty *= params.beta_M
            slope = merit_slope(grad_pair, constraints, V, penalty)
        if slope < 0:
            if j:
                _LOGGER.info(f'Merit penalty increased {j} times: M = {penalty:.3e}')
            return penalty, slope
    raise DescentFailureError(penalty, slope)
