"""
Solver Tolerances and Defaults for CoopGamePy

Every numeric threshold used by the solvers lives here so that callers can
see (and override through keyword arguments) the values a result depends on.
"""

# Matrix games
VALUE_TOL = 1e-9
PROB_TOL = 1e-12
PROB_CLAMP_TOL = 1e-9
SADDLE_TOL = 1e-12
PIVOT_TOL = 1e-12
MAX_PIVOTS = 10_000

# Payoff-plane geometry
CROSS_TOL = 1e-12
MEMBERSHIP_TOL = 1e-9
FACE_TOL = 1e-12

# Lambda-transfer search
DEFAULT_LAMBDA_BRACKET = (1e-6, 1e6)
DEFAULT_LAMBDA_TOL = 1e-9
LAMBDA_PROBES = 64
MAX_BISECTION_STEPS = 200

# Counter-terrorism parameter checks
PARAM_TOL = 1e-12

# Reports
REPORT_DIGITS = 12

STRATEGY_LABELS = ("Preempt", "Status Quo", "Deter")
