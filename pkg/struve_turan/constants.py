import math

SQRT_PI = math.sqrt(math.pi)

# representation switch points (argument x)
SERIES_MAX_X = 8.0
INTEGRAL_MAX_X = 100.0
K_ASYMPTOTIC_MIN_X = 40.0
L_MAX_X = 40.0
ASYMPTOTIC_MIN_X = 18.0
X_MAX = 1000.0

DEFAULT_TOL = 1e-13
QUAD_TOL = 1e-13
QUAD_PANEL_LIMIT = 2000

# series cancellation guard: max term / |result|
CANCELLATION_LIMIT = 1e12

RICHARDSON_STEP = 1e-5
NEWTON_MAX_ITER = 25
BISECTION_WIDTH = 1e-6
ZERO_TOL = 1e-12
BESSEL_SCAN_STEP = 0.25

# Struve zeros found numerically stay below X_MAX
MAX_COMPUTED_ZEROS = 300

POLE_EXCLUSION = 1e-6
GRID_EXCLUSION = 1e-4
GRID_SNAP = 1e-12

LAGUERRE_DPS = 40
LAGUERRE_MAX_ORDER = 6
LAGUERRE_MAX_X = 20.0

VERIFY_TOLERANCE = 1e-9
MONOTONE_STEP = 0.1
LOG_CONVEXITY_STEP = 0.5
ASYMPTOTIC_ZERO_X = 1e-3
ASYMPTOTIC_INFINITY_X = 200.0

# truncations used by the command line for the expansion methods
PRODUCT_TERMS = 200
J_SERIES_TERMS = 80

# EvalResult.method values
SERIES = 'series'
INTEGRAL = 'integral'
ASYMPTOTIC = 'asymptotic'
PRODUCT = 'product'
J_SERIES = 'j_series'
CLOSED_FORM = 'closed_form'
VIA_H_MINUS_Y = 'via_h_minus_y'
VIA_Y_PLUS_K = 'via_y_plus_k'
RECURRENCE = 'recurrence'

# normalized function kinds
CAL_H = 'calH'
BB_H = 'bbH'
CAL_K = 'calK'

FUNCTIONS = ('H', 'L', 'K', 'J', 'Y', CAL_H, BB_H, CAL_K)

# row status of an inequality check
OK = 'ok'
VIOLATION = 'violation'
EXCLUDED = 'excluded'
ERROR = 'error'
