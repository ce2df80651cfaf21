"""Constants"""

# Elasticity inner product defaults: Lame parameters and damping of the mass term
DEFAULT_MU = 1.0
DEFAULT_LAMBDA = 0.0
DEFAULT_DELTA = 0.2
