"""Convex quadratic programming"""

from .const import *
from .qp_status import QpStatus
from .qp_settings import QpSettings
from .kkt import KktResiduals, kkt_residuals, kkt_residuals_at
from .qp_solution import QpSolution
from .admm_solver import AdmmSolver, solve_qp
