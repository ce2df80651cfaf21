"""Constants"""

STATE_TOLERANCE = 1e-10

# CG iteration cap as a multiple of the system size
CG_MAX_ITER_FACTOR = 10

# Step for the central-difference fallback of the source gradient, relative to the mesh diameter
SOURCE_FD_STEP = 1e-6

# Degree-2 interior rules: barycentric coordinates (rows) and weights summing to 1
_A3 = 0.5854101966249685
_B3 = 0.1381966011250105

QUADRATURE_RULES = {
    2: (
        ((2 / 3, 1 / 6, 1 / 6), (1 / 6, 2 / 3, 1 / 6), (1 / 6, 1 / 6, 2 / 3)),
        (1 / 3, 1 / 3, 1 / 3),
    ),
    3: (
        ((_A3, _B3, _B3, _B3), (_B3, _A3, _B3, _B3), (_B3, _B3, _A3, _B3), (_B3, _B3, _B3, _A3)),
        (0.25, 0.25, 0.25, 0.25),
    ),
}
