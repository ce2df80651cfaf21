""" convexshape Exceptions """

from .convex_shape_exception import ConvexShapeException
from .mesh_parse_error import MeshParseError
from .non_conforming_mesh_error import NonConformingMeshError
from .degenerate_cell_error import DegenerateCellError
from .boundary_topology_error import BoundaryTopologyError
from .self_intersection_error import SelfIntersectionError
from .mesh_quality_error import MeshQualityError
from .mesh_mismatch_error import MeshMismatchError
from .dimension_mismatch_error import DimensionMismatchError
from .unsupported_operation_error import UnsupportedOperationError
from .solver_convergence_error import SolverConvergenceError
from .integrand_evaluation_error import IntegrandEvaluationError
from .missing_partial_error import MissingPartialError
from .invalid_parameter_error import InvalidParameterError
from .step_failure_error import StepFailureError
from .descent_failure_error import DescentFailureError
from .qp_failure_error import QpFailureError
from .expression_syntax_error import ExpressionSyntaxError
from .unknown_identifier_error import UnknownIdentifierError
from .config_error import ConfigError
from .export_error import ExportError
