"""Run configuration"""

from .const import *
from .problem_kind import ProblemKind
from .examples import (
    ExampleProblem, build_problem, example_problem, five_fold_points, five_fold_source, source_function
)
from .run_config import MeshConfig, OutputConfig, RunConfig, load_config, parse_config
