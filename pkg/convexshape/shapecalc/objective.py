from typing import NamedTuple

import numpy as np

from ..exception import MeshMismatchError
from ..fem import ScalarFieldP1, guarded_eval, integrate, quadrature_points
from ..mesh import SimplicialMesh
from .integrand import Integrand


class QuadratureState(NamedTuple):
    """(x, u_h(x), grad u_h(x)) at every quadrature point"""
    points: np.ndarray
    values: np.ndarray
    gradients: np.ndarray

    @property
    def shape(self):
        return self.values.shape


def quadrature_state(mesh: SimplicialMesh, u: ScalarFieldP1) -> QuadratureState:
    if not mesh.is_same(u.mesh):
        raise MeshMismatchError('state does not live on the mesh')
    points = quadrature_points(mesh)
    values = u.at_quadrature()
    grads = np.broadcast_to(u.cell_gradients()[:, None, :], points.shape)
    return QuadratureState(points, values, grads)


def evaluate_objective(mesh: SimplicialMesh, u: ScalarFieldP1, integrand: Integrand) -> float:
    """J_h = sum over cells of the quadrature of j(x, u_h, grad u_h)"""
    qs = quadrature_state(mesh, u)
    j = guarded_eval(integrand.value, qs.shape, qs.points, qs.values, qs.gradients)
    return integrate(mesh, j)
