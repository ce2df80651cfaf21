"""Constants"""

DEFAULT_T0 = 1.0
DEFAULT_BETA = 0.5
DEFAULT_SIGMA = 0.1
DEFAULT_PENALTY = 1e-9
DEFAULT_BETA_M = 10.0
DEFAULT_EPS_TOL = 1e-6
DEFAULT_MAX_OUTER = 500

MAX_BACKTRACKS = 60
MAX_PENALTY_INCREASES = 60

# A QP that stops at max_iter is retried once with these multipliers on its settings
QP_RETRY_ITER_FACTOR = 5
QP_RETRY_SCALING_ITER = 25

TRACE_COLUMNS = ('iter', 'J', 'phi0', 'slope', 't', 'k', 'maxC', 'gradnorm', 'M', 'qp_status')
