"""Discrete shape calculus"""

from .integrand import Integrand
from .objective import QuadratureState, quadrature_state, evaluate_objective
from .adjoint import adjoint_rhs, solve_adjoint
from .shape_gradient import ShapeGradient, pair
from .shape_derivative import ShapeEvaluation, evaluate_shape, shape_derivative, source_gradient
from .material_derivative import material_derivative_pairing, finite_difference_pairing
