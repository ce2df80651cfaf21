"""Direction-finding problem"""

from .const import *
from .elasticity_params import ElasticityParams
from .qp_strategy import QpStrategy
from .elasticity import assemble_elasticity, vector_dofs
from .normal_trace import BoundaryScalarField, assemble_normal_trace, normal_pairing
from .quadratic_program import QuadraticProgram
from .direction_qp import DirectionProblem, build_direction_qp
from .hold_all import hold_all_violation
