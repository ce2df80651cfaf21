from typing import Callable

import numpy as np

from ..mesh import SimplicialMesh
from .quadrature import guarded_eval, integrate, quadrature_points
from .scalar_field import ScalarFieldP1


def l2_error(mesh: SimplicialMesh, u: ScalarFieldP1, exact: Callable[[np.ndarray], np.ndarray]) -> float:
    points = quadrature_points(mesh)
    reference = guarded_eval(exact, points.shape[:2], points)
    return float(np.sqrt(integrate(mesh, (u.at_quadrature() - reference) ** 2)))


def h1_seminorm_error(mesh: SimplicialMesh, u: ScalarFieldP1, exact_grad: Callable[[np.ndarray], np.ndarray]) -> float:
    points = quadrature_points(mesh)
    reference = guarded_eval(exact_grad, points.shape[:2], points)
    diff = u.cell_gradients()[:, None, :] - reference
    return float(np.sqrt(integrate(mesh, np.sum(diff ** 2, axis=2))))
