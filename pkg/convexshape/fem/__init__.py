"""P1 finite elements"""

from .const import *
from .boundary_condition import BoundaryCondition
from .sparse_operator import SparseSymmetricOperator
from .quadrature import quadrature_rule, quadrature_points, guarded_eval, integrate
from .scalar_field import ScalarFieldP1
from .assembly import (
    assemble_stiffness, assemble_mass, assemble_load, local_stiffness, local_mass, scatter_matrix, scatter_vector
)
from .linear_solver import cg_solve
from .problem_spec import ProblemSpec
from .state import solve_state, solve_system, system_operator
from .error_norms import l2_error, h1_seminorm_error
