"""Outer loop: direction QP, descent safeguard, Armijo backtracking, deformation"""

import logging
import math
from dataclasses import replace
from typing import Dict, Optional, Sequence, Tuple

from ..convexity import constraint_jacobian, constraint_values, convexify, is_convex, violation_threshold
from ..deform import assemble_elasticity, assemble_normal_trace, build_direction_qp, hold_all_violation
from ..exception import DescentFailureError, MeshQualityError, QpFailureError, StepFailureError
from ..fem import ProblemSpec
from ..mesh import SimplicialMesh, deformation_quality
from ..qp import QpSolution, QpStatus, solve_qp
from ..shapecalc import evaluate_shape, pair
from .algorithm_params import AlgorithmParams
from .armijo import armijo_search
from .const import QP_RETRY_ITER_FACTOR, QP_RETRY_SCALING_ITER
from .merit import MeritEvaluation, constraint_violation, ensure_descent, merit_evaluation, merit_slope
from .opt_trace import IterationRecord, OptTrace
from .stop_reason import StopReason

_LOGGER = logging.getLogger(__name__)


def _solve_direction_qp(qp, params: AlgorithmParams, warm_start) -> QpSolution:
    sol = solve_qp(qp, settings=params.qp, warm_start=warm_start)
    if sol.status == QpStatus.MAX_ITER:
        retry = replace(
            params.qp,
            max_iter=params.qp.max_iter * QP_RETRY_ITER_FACTOR,
            scaling_iter=max(params.qp.scaling_iter, QP_RETRY_SCALING_ITER),
        )
        _LOGGER.info(f'Direction QP hit max_iter, retrying with {retry.max_iter} iterations')
        sol = solve_qp(qp, settings=retry, warm_start=(sol.primal, sol.ineq_multipliers, sol.eq_multipliers))
    return sol


def prepare_initial_mesh(mesh: SimplicialMesh, params: AlgorithmParams) -> SimplicialMesh:
    if mesh.dim == 2 and params.convexity and not is_convex(mesh, violation_threshold(mesh)):
        _LOGGER.info('Initial mesh is not convex, convexifying')
        return convexify(mesh)
    return mesh


def run(
    initial_mesh: SimplicialMesh,
    problem: ProblemSpec,
    params: Optional[AlgorithmParams] = None,
    trace: Optional[OptTrace] = None,
    hold_all: Optional[Tuple[Sequence[float], Sequence[float]]] = None,
) -> Tuple[SimplicialMesh, OptTrace]:
    """
    Optimize the shape starting from initial_mesh.

    Stops on stationarity (sqrt|J'(V)| <= eps_tol), max_outer, or a failed QP, descent
    or line search; the reason is stored on the trace. Errors from the state solver
    propagate, leaving the records collected so far in the trace passed by the caller.
    """
    params = params or AlgorithmParams()
    trace = trace if trace is not None else OptTrace()
    mesh = prepare_initial_mesh(initial_mesh, params)
    problem.check_mesh(mesh)

    M = params.M
    t_prev = params.t0
    state_guess = adjoint_guess = None
    warm_start = None
    _LOGGER.info(f'Optimizing on {mesh!r} (max {params.max_outer} iterations)')

    for iteration in range(1, params.max_outer + 1):
        ev = evaluate_shape(mesh, problem, params.state_tol, state_guess, adjoint_guess)
        constraints = constraint_jacobian(mesh) if params.convexity else None
        max_constraint = constraint_values(mesh).max_value
        violation = constraint_violation(mesh) if params.convexity else 0.0

        t_init = t_prev / params.beta
        E = assemble_elasticity(mesh, params.elasticity)
        N = assemble_normal_trace(mesh)
        direction = build_direction_qp(E, N, ev.gradient, constraints, t_init, params.strategy)
        sol = _solve_direction_qp(direction.qp, params, warm_start)

        def record(**kwargs) -> IterationRecord:
            fields = dict(
                iteration=iteration, objective=ev.objective, phi0=ev.objective + M * violation, slope=None,
                step=None, backtracks=None, max_constraint=max_constraint, gradnorm=math.nan, penalty=M,
                qp_status=sol.status,
            )
            fields.update(kwargs)
            rec = IterationRecord(**fields)
            trace.append(rec)
            return rec

        try:
            sol.raise_for_status()
        except QpFailureError as err:
            record()
            trace.stop(StopReason.QP_FAILURE, str(err))
            break
        warm_start = (sol.primal, sol.ineq_multipliers, sol.eq_multipliers)

        V = direction.feasible_direction(sol.primal)
        grad_pair = pair(ev.gradient, V)
        gradnorm = math.sqrt(abs(grad_pair))
        if gradnorm <= params.eps_tol:
            record(gradnorm=gradnorm, slope=merit_slope(grad_pair, constraints, V, M))
            trace.stop(StopReason.STATIONARY)
            break

        try:
            M, slope = ensure_descent(grad_pair, constraints, V, M, params)
        except DescentFailureError as err:
            record(gradnorm=gradnorm)
            trace.stop(StopReason.DESCENT_FAILURE, str(err))
            break
        phi0 = ev.objective + M * violation

        evaluations: Dict[float, MeritEvaluation] = {}

        def merit(t: float) -> float:
            evaluations[t] = merit_evaluation(mesh, V, t, M, problem, params.state_tol, ev.state.values,
                                              params.convexity)
            return evaluations[t].value

        def quality(t: float) -> bool:
            return deformation_quality(mesh, V, t).passed

        try:
            step = armijo_search(merit, phi0, slope, t_init, params.beta, params.sigma, quality,
                                 params.max_backtracks)
        except (StepFailureError, MeshQualityError) as err:
            record(gradnorm=gradnorm, slope=slope, phi0=phi0)
            trace.stop(StopReason.STEP_FAILURE, str(err))
            break

        accepted = evaluations[step.t]
        record(gradnorm=gradnorm, slope=slope, phi0=phi0, step=step.t, backtracks=step.k,
               phi_accepted=accepted.value, quality=deformation_quality(mesh, V, step.t),
               objective_after=accepted.objective, max_constraint_after=constraint_values(accepted.mesh).max_value)
        _LOGGER.debug(f'Iteration {iteration}: J={ev.objective:.10g} phi0={phi0:.10g} slope={slope:.3e} '
                      f't={step.t:.4g} k={step.k} maxC={max_constraint:.3e} gradnorm={gradnorm:.3e} M={M:.1e}')

        mesh = accepted.mesh
        state_guess = accepted.state.values
        adjoint_guess = ev.adjoint.values
        t_prev = step.t

        if hold_all is not None:
            excursion = hold_all_violation(mesh, *hold_all)
            if excursion > 0:
                _LOGGER.warning(f'Iteration {iteration}: shape leaves the hold-all box by {excursion:.3e}')
    else:
        trace.stop(StopReason.MAX_OUTER, f'no stationary point within {params.max_outer} iterations')

    _LOGGER.info(f'Optimization stopped ({trace.stop_reason.stringify()}) after {trace.iterations} accepted steps, '
                 f'J = {trace.final_objective}')
    return mesh, trace

