"""Convexity constraints"""

from .const import CONVEXITY_TOLERANCE
from .constraint_system import (
    ConstraintSystem, constraint_values, constraint_jacobian, is_convex, violation_threshold
)
from .convex_hull import convex_hull_2d
from .convexify import convexify, check_simple_polygon
