import logging
from typing import Optional

import numpy as np

from ..fem import (
    STATE_TOLERANCE, BoundaryCondition, ScalarFieldP1, guarded_eval, quadrature_rule, scatter_vector, solve_system
)
from ..mesh import SimplicialMesh
from .integrand import Integrand
from .objective import quadrature_state

_LOGGER = logging.getLogger(__name__)


def adjoint_rhs(mesh: SimplicialMesh, u: ScalarFieldP1, integrand: Integrand) -> np.ndarray:
    """Nodal vector of int j_u phi_i + j_v . grad phi_i (derivative of J_h with respect to u)"""
    bary, weights = quadrature_rule(mesh.dim)
    qs = quadrature_state(mesh, u)
    ju = guarded_eval(integrand.du, qs.shape, qs.points, qs.values, qs.gradients)
    jv = guarded_eval(integrand.dv, qs.shape, qs.points, qs.values, qs.gradients)
    jv_mean = np.einsum('q,cqd->cd', weights, jv)
    local = (ju * weights) @ bary + np.einsum('cd,cad->ca', jv_mean, mesh.gradients)
    return scatter_vector(mesh, mesh.volumes[:, None] * local)


def solve_adjoint(
    mesh: SimplicialMesh,
    u: ScalarFieldP1,
    integrand: Integrand,
    tol: float = STATE_TOLERANCE,
    bc: BoundaryCondition = BoundaryCondition.DIRICHLET_ZERO,
    x0: Optional[np.ndarray] = None,
) -> ScalarFieldP1:
    """
    Solve a(p, w) = -(int j_u w + j_v . grad w) for all test functions w.

    With this sign the derivative formula of shape_derivative is the exact
    derivative of the discrete objective; for j = u and f = 1 it gives p = -u.
    """
    b = -adjoint_rhs(mesh, u, integrand)
    p = solve_system(mesh, bc, b, tol, x0=x0)
    _LOGGER.debug(f'Adjoint solved: {p!r}')
    return p
