"""Constants"""

# Constraint values up to this multiple of diam^d count as satisfied (rounding noise of the cross/triple products)
CONVEXITY_TOLERANCE = 1e-8
