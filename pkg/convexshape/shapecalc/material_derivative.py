"""Adjoint-free cross-checks of the shape derivative"""

import numpy as np

from ..fem import (
    STATE_TOLERANCE, BoundaryCondition, ProblemSpec, ScalarFieldP1,
    guarded_eval, local_mass, quadrature_rule, scatter_vector, solve_state, solve_system,
)
from ..mesh import SimplicialMesh, VectorFieldP1
from .objective import evaluate_objective, quadrature_state
from .shape_derivative import source_gradient


def material_derivative_pairing(
    mesh: SimplicialMesh,
    problem: ProblemSpec,
    u: ScalarFieldP1,
    V: VectorFieldP1,
    tol: float = STATE_TOLERANCE,
) -> float:
    """
    J_h'(Omega_h; V) through the material derivative: solve a(u', w) = db[V](w) - da[V](u, w)
    for the discrete state sensitivity u' and differentiate J_h directly.
    """
    integrand = problem.integrand
    bary, weights = quadrature_rule(mesh.dim)
    cells = mesh.cells
    vol = mesh.volumes
    G = mesh.gradients
    DV = V.jacobians()
    div = np.trace(DV, axis1=1, axis2=2)
    Vq = np.einsum('qa,cad->cqd', bary, V.values[cells])
    u_local = u.values[cells]

    # derivative of the bilinear form applied to u
    B = div[:, None, None] * np.eye(mesh.dim) - DV - np.transpose(DV, (0, 2, 1))
    dA = vol[:, None, None] * np.einsum('cak,ckl,cbl->cab', G, B, G)
    if problem.bc == BoundaryCondition.NEUMANN_REACTION:
        dA = dA + div[:, None, None] * local_mass(mesh)
    dAu = scatter_vector(mesh, np.einsum('cab,cb->ca', dA, u_local))

    # derivative of the load
    qs = quadrature_state(mesh, u)
    fq = guarded_eval(problem.rhs, qs.shape, qs.points)
    gf = source_gradient(mesh, problem.rhs, qs.points, problem.rhs_gradient)
    dfv = np.sum(gf * Vq, axis=2) + fq * div[:, None]
    db = scatter_vector(mesh, vol[:, None] * ((dfv * weights) @ bary))

    udot = solve_system(mesh, problem.bc, db - dAu, tol)

    args = (qs.points, qs.values, qs.gradients)
    j = guarded_eval(integrand.value, qs.shape, *args)
    jx = guarded_eval(integrand.dx, qs.shape, *args)
    ju = guarded_eval(integrand.du, qs.shape, *args)
    jv = guarded_eval(integrand.dv, qs.shape, *args)

    grad_shift = -np.einsum('ckl,ck->cl', DV, u.cell_gradients())
    explicit = np.sum(jx * Vq, axis=2) + np.einsum('cqd,cd->cq', jv, grad_shift) + j * div[:, None]
    implicit = ju * udot.at_quadrature() + np.einsum('cqd,cd->cq', jv, udot.cell_gradients())
    return float(vol @ ((explicit + implicit) @ weights))


def finite_difference_pairing(
    mesh: SimplicialMesh,
    problem: ProblemSpec,
    V: VectorFieldP1,
    t: float,
    tol: float = STATE_TOLERANCE,
) -> float:
    """[J_h((I + tV) Omega_h) - J_h((I - tV) Omega_h)] / 2t with re-solved states"""
    values = []
    for sign in (1.0, -1.0):
        moved = mesh.with_vertices(mesh.vertices + sign * t * V.values)
        u = solve_state(moved, problem, tol)
        values.append(evaluate_objective(moved, u, problem.integrand))
    return (values[0] - values[1]) / (2 * t)
