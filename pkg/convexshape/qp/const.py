"""Constants"""

QP_TOLERANCE = 1e-8
QP_MAX_ITER = 200000

# ADMM step parameters
QP_RHO = 0.1
QP_SIGMA = 1e-6
QP_ALPHA = 1.6
RHO_EQ_FACTOR = 1e3
RHO_MIN = 1e-6
RHO_MAX = 1e6

# Ruiz equilibration
SCALING_ITER = 10
SCALING_MIN = 1e-4
SCALING_MAX = 1e4

# Residual-balancing rho update: checked every interval, applied when the ratio leaves [1/5, 5]
ADAPTIVE_RHO_INTERVAL = 25
ADAPTIVE_RHO_TOLERANCE = 5.0

POLISH_DELTA = 1e-7
POLISH_REFINE_ITER = 5

INFEASIBILITY_TOLERANCE = 1e-7
