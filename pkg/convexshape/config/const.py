"""Constants"""

DEFAULT_CYCLES = 3
DEFAULT_OUTPUT_DIRECTORY = "out"
OUTPUT_FORMATS = ("vtk", "svg", "csv")
DEFAULT_SEED = 0

DEFAULT_LEVEL_2D = 2
DEFAULT_LEVEL_3D = 1

FIVE_FOLD_COUNT = 5
FIVE_FOLD_INNER_RADIUS = 1.0
FIVE_FOLD_OUTER_RADIUS = 1.2
