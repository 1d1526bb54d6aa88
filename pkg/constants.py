"""
Constants for the Pfaff-Darboux convexity toolkit.
Centralizes command names, exit codes and report vocabulary.
"""

# CLI commands
CMD_RANK = "rank"
CMD_KERNEL = "kernel"
CMD_CAUCHY = "cauchy"
CMD_BFORM = "bform"
CMD_LEG_CHECK = "leg-check"
CMD_LEG_SAMPLE = "leg-sample"
CMD_LEG_FINDPOS = "leg-findpos"
CMD_HESSIAN = "hessian"
CMD_SOMEGA = "somega"
CMD_CHART_VALIDATE = "chart-validate"
CMD_CHART_GENFN = "chart-genfn"
CMD_CONVEXIFY = "convexify"
CMD_VERIFY = "verify"
CMD_SUBMERSION = "submersion"

COMMANDS = (
    CMD_RANK, CMD_KERNEL, CMD_CAUCHY, CMD_BFORM,
    CMD_LEG_CHECK, CMD_LEG_SAMPLE, CMD_LEG_FINDPOS,
    CMD_HESSIAN, CMD_SOMEGA,
    CMD_CHART_VALIDATE, CMD_CHART_GENFN, CMD_CONVEXIFY, CMD_VERIFY,
    CMD_SUBMERSION,
)

# Exit codes
EXIT_OK = 0
EXIT_MATH_FAILURE = 1
EXIT_INPUT_ERROR = 2

# Leg+ search outcomes
SEARCH_FOUND = "found"
SEARCH_EMPTY = "empty"
SEARCH_INCONCLUSIVE = "inconclusive"

# Pipeline step names
STEP_PRECONDITION = "precondition"
STEP_NORMALIZE = "normalize_chart"
STEP_ABSORB = "absorb_quadratic"
STEP_PHI = "apply_phi"
STEP_RENORMALIZE = "renormalize_chart"
STEP_B = "apply_b"
STEP_EPSILON = "apply_epsilon"
STEP_VERIFY = "verify_representation"
STEP_GENERATING = "generating_function"
STEP_SEARCH = "legendrian_search"

# Seed-chart validation flags
FLAG_SHAPE = "shape"
FLAG_VANISHING = "vanishing_at_base"
FLAG_IDENTITY = "identity"
FLAG_FACTOR_NONZERO = "factor_nonzero"
FLAG_FACTOR_POSITIVE = "factor_positive"
FLAG_RANK = "submersion_rank"
FLAG_PFAFF_CLASS = "pfaff_class"
FLAG_VOLUME = "normal_form_volume"

# Representation verification flags
FLAG_REP_IDENTITY = "i_identity"
FLAG_REP_POSITIVE = "ii_coefficients_positive"
FLAG_REP_CONVEX = "iii_strictly_convex"
FLAG_REP_LEAVES = "iv_leaf_constancy"
FLAG_REP_SUBMERSION = "v_submersion"
FLAG_REP_KERNEL = "v_kernel_is_cauchy"
FLAG_REP_BALL = "sampled_ball"

# Default coordinate name prefix (x1 ... xn)
VARIABLE_PREFIX = "x"
