"""Constants"""

# Mesh-quality bounds of the line search: 1/2 <= det(I + t DV) <= 2 and ||t DV|| <= 0.3
QUALITY_MIN_DET = 0.5
QUALITY_MAX_DET = 2.0
QUALITY_MAX_NORM = 0.3

MAX_REFINEMENT_LEVEL = 8

# Relative volume below which a cell counts as degenerate
DEGENERATE_VOLUME_TOLERANCE = 1e-14

# Outward oriented facets of a positively oriented simplex, by local vertex index
LOCAL_FACETS = {
    2: ((1, 2), (2, 0), (0, 1)),
    3: ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)),
}

LOCAL_EDGES = {
    2: ((0, 1), (1, 2), (2, 0)),
    3: ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
}
