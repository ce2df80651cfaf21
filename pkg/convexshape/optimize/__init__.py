"""Merit-based shape optimization loop"""

from .const import *
from .stop_reason import StopReason
from .algorithm_params import AlgorithmParams
from .opt_trace import IterationRecord, OptTrace
from .merit import (
    MeritEvaluation, constraint_violation, ensure_descent, merit_at, merit_evaluation, merit_slope, merit_value
)
from .armijo import ArmijoStep, armijo_search
from .run import prepare_initial_mesh, run
