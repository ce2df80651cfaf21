"""
Exact derivative of the discrete shape functional with respect to vertex positions.

For the basis displacement V = phi_a e_alpha on a cell with hat gradients G,
DV = e_alpha G_a^T and div V = G_a,alpha, so every term of

    j_x . V - j_v . DV^T grad u + grad p^T (div V I - DV - DV^T) grad u - div(f V) p + j div V

has a closed form per (cell, local vertex, coordinate).
"""

import logging
from typing import Callable, NamedTuple, Optional

import numpy as np

from ..fem import (
    STATE_TOLERANCE, SOURCE_FD_STEP, BoundaryCondition, ProblemSpec, ScalarFieldP1,
    guarded_eval, local_mass, quadrature_rule, scatter_vector, solve_state,
)
from ..mesh import SimplicialMesh
from .adjoint import solve_adjoint
from .integrand import Integrand
from .objective import evaluate_objective, quadrature_state
from .shape_gradient import ShapeGradient

_LOGGER = logging.getLogger(__name__)

PointFunction = Callable[[np.ndarray], np.ndarray]


def source_gradient(
    mesh: SimplicialMesh,
    f: PointFunction,
    points: np.ndarray,
    f_gradient: Optional[PointFunction] = None,
) -> np.ndarray:
    """grad f at points (cells, q, d): analytic when available, else central differences with step 1e-6 diam."""
    shape = points.shape[:2]
    if f_gradient is not None:
        return guarded_eval(f_gradient, shape, points)
    h = SOURCE_FD_STEP * mesh.diameter
    grad = np.empty(points.shape)
    for alpha in range(mesh.dim):
        e = np.zeros(mesh.dim)
        e[alpha] = h
        grad[:, :, alpha] = (guarded_eval(f, shape, points + e) - guarded_eval(f, shape, points - e)) / (2 * h)
    return grad


def scatter_vector_field(mesh: SimplicialMesh, local: np.ndarray) -> np.ndarray:
    """Sum per-cell contributions (cells, d+1, d) into nodal values (vertices, d)"""
    return np.column_stack([scatter_vector(mesh, local[:, :, alpha]) for alpha in range(mesh.dim)])


def shape_derivative(
    mesh: SimplicialMesh,
    u: ScalarFieldP1,
    p: ScalarFieldP1,
    integrand: Integrand,
    f: PointFunction,
    bc: BoundaryCondition = BoundaryCondition.DIRICHLET_ZERO,
    f_gradient: Optional[PointFunction] = None,
) -> ShapeGradient:
    integrand.require_partials()
    bary, weights = quadrature_rule(mesh.dim)
    vol = mesh.volumes[:, None, None]
    G = mesh.gradients
    qs = quadrature_state(mesh, u)
    args = (qs.points, qs.values, qs.gradients)

    j = guarded_eval(integrand.value, qs.shape, *args)
    jx = guarded_eval(integrand.dx, qs.shape, *args)
    jv = guarded_eval(integrand.dv, qs.shape, *args)
    fq = guarded_eval(f, qs.shape, qs.points)
    gf = source_gradient(mesh, f, qs.points, f_gradient)
    pq = p.at_quadrature()
    gu = u.cell_gradients()
    gp = p.cell_gradients()

    # j_x . V
    local = np.einsum('q,qa,cqd->cad', weights, bary, jx)
    # -j_v . DV^T grad u
    jv_mean = np.einsum('q,cqd->cd', weights, jv)
    local -= np.einsum('cd,cad->ca', jv_mean, G)[:, :, None] * gu[:, None, :]
    # grad p^T (div V I - DV - DV^T) grad u
    Gu = np.einsum('cad,cd->ca', G, gu)
    Gp = np.einsum('cad,cd->ca', G, gp)
    pu = np.sum(gp * gu, axis=1)
    local += G * pu[:, None, None] - gp[:, None, :] * Gu[:, :, None] - Gp[:, :, None] * gu[:, None, :]
    # -div(f V) p
    local -= np.einsum('q,qa,cqd,cq->cad', weights, bary, gf, pq)
    local -= G * (fq * pq @ weights)[:, None, None]
    # j div V
    local += G * (j @ weights)[:, None, None]
    local *= vol

    if bc == BoundaryCondition.NEUMANN_REACTION:
        # reaction term of the form: div V times the local mass pairing of u and p
        cells = mesh.cells
        up = np.einsum('ca,cab,cb->c', u.values[cells], local_mass(mesh), p.values[cells])
        local += G * up[:, None, None]

    return ShapeGradient(mesh, scatter_vector_field(mesh, local))


class ShapeEvaluation(NamedTuple):
    state: ScalarFieldP1
    adjoint: ScalarFieldP1
    gradient: ShapeGradient
    objective: float


def evaluate_shape(
    mesh: SimplicialMesh,
    problem: ProblemSpec,
    tol: float = STATE_TOLERANCE,
    state_guess: Optional[np.ndarray] = None,
    adjoint_guess: Optional[np.ndarray] = None,
) -> ShapeEvaluation:
    """State, adjoint, shape gradient and objective of one mesh"""
    u = solve_state(mesh, problem, tol, x0=state_guess)
    p = solve_adjoint(mesh, u, problem.integrand, tol, bc=problem.bc, x0=adjoint_guess)
    grad = shape_derivative(mesh, u, p, problem.integrand, problem.rhs, problem.bc, problem.rhs_gradient)
    objective = evaluate_objective(mesh, u, problem.integrand)
    _LOGGER.debug(f'J = {objective:.10g}, {grad!r}')
    return ShapeEvaluation(u, p, grad, objective)
