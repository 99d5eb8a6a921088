"""Define consts for the pyfekete package."""
import math

__title__ = "pyfekete"
__version__ = "0.1.0"

# Random polynomials
GENERATOR_ID = "numpy.PCG64"
DEFAULT_SEED = 20170217

# Polynomial evaluation
MAX_RUDIN_SHAPIRO_ORDER = 20
DIRECT_EVAL_THRESHOLD = 4096
INT64_MAX = 2 ** 63 - 1
INT64_MIN = -(2 ** 63)

# Mahler measure
MIN_QUADRATURE_SAMPLES = 16
DEFAULT_M0_SAMPLES = 2 ** 14
M0_SAMPLES_PER_DEGREE = 64
DEGENERATE_MODULUS = 1e-300
ROOT_MAX_DEGREE = 4096
ROOT_MAX_ITERATIONS = 200
ROOT_CORRECTION_TOL = 1e-13
ROOT_RESIDUAL_TOL = 1e-8
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))
INEQUALITY_SLACK = 1e-9
MIN_ENSEMBLE_SAMPLES = 100

METHOD_UNIFORM_QUADRATURE = "uniform_quadrature"
METHOD_ROOTS_JENSEN = "roots_jensen"
METHOD_PRODUCT_BOUND = "product_bound"
VALID_METHODS = (METHOD_UNIFORM_QUADRATURE, METHOD_ROOTS_JENSEN, METHOD_PRODUCT_BOUND)

EVAL_DIRECT = "direct"
EVAL_CHIRP = "chirp"

# Circle zeros and arcs
DEFAULT_REFINEMENT = 4
DEFAULT_BISECT_TOL = 1e-12
MAX_BISECT_STEPS = 60
ZERO_NODE_TOL = 1e-8
H_CONSISTENCY_TOL = 1e-8
ARC_SAMPLES = 33
DEFAULT_EPSILON = 1.0 / 8.0
DEFAULT_GAMMA = math.sqrt(8.0)
DELTA_SCHEDULE = tuple(round(0.5 - 0.05 * i, 2) for i in range(10))
ETA_FACTOR = 0.9
ETA_CAP = math.pi / 2 - 1e-6

# Infinite product and c_delta
DEFAULT_PRODUCT_TOL = 1e-12
DEFAULT_CDELTA_TOL = 1e-8
MIN_CDELTA_TOL = 1e-12
MAX_CDELTA_TOL = 1e-2
MIN_TRUNCATION = 64
TRUNCATION_PER_UNIT = 20
SIMPSON_MAX_DEPTH = 48
SIMPSON_MAX_EVALUATIONS = 2_000_000
MIN_DISTRIBUTION_PRIME = 100

# Certificates
MIN_CERTIFICATE_PRIME = 11
CERTIFICATE_SLACK = 1e-6
GAUSS_PRODUCT_TOL = 1e-8
ROOT_M0_MAX_PRIME = 512

# Report statuses
STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_OBSERVE = "observe"
VALID_STATUSES = (STATUS_PASS, STATUS_FAIL, STATUS_OBSERVE)

# Check ids
CHECK_GAUSS_MODULUS = "gauss-modulus"
CHECK_GAUSS_SIGN = "gauss-sign"
CHECK_FEKETE_AT_ONE = "fekete-at-one"
CHECK_SIGN_AGREEMENT = "sign-agreement"
CHECK_ZERO_COUNT = "zero-count"
CHECK_ZERO_FRACTION = "zero-fraction"
CHECK_PARSEVAL = "parseval-m2"
CHECK_ESTIMATOR_AGREEMENT = "m0-estimator-agreement"
CHECK_M0_SMALL = "m0-small-prime"
CHECK_JENSEN = "jensen-bound"
CHECK_POWER_MEAN = "power-mean-monotone"
CHECK_M1_OBSERVED = "m1-below-m2"
CHECK_SUBARC = "subarc-measure"
CHECK_PRODUCT_BOUND = "product-bound"
CHECK_PRODUCT_BOUND_ZEROS = "product-bound-with-zeros"
CHECK_DEFLATION = "deflation-at-one"
CHECK_ARC_COUNT = "arc-derivative-count"
CHECK_ARC_CONSISTENCY = "arc-nonvanishing"
CHECK_SIEVE_RANDOM = "large-sieve-random"
CHECK_SIEVE_CHAIN = "large-sieve-derivative-chain"
CHECK_SIEVE_BAD_ARCS = "large-sieve-bad-arc-count"
CHECK_CDELTA_REFLECTION = "cdelta-reflection"
CHECK_CDELTA_SMALL = "cdelta-small-delta"
CHECK_CDELTA_ORACLE = "cdelta-riemann-oracle"
CHECK_CDELTA_ENVELOPE = "cdelta-envelope"
CHECK_DISTRIBUTION = "midpoint-distribution"
CHECK_ENSEMBLE = "ensemble-limit"
CHECK_ENSEMBLE_REPRODUCIBLE = "ensemble-reproducible"
CHECK_RS_COEFFICIENTS = "rudin-shapiro-coefficients"
CHECK_RS_PARSEVAL = "rudin-shapiro-complementary"
CHECK_RS_MAHLER = "rudin-shapiro-m0"
CHECK_MAX_MODULUS = "max-modulus"
CHECK_CERTIFICATE = "certificate-bound"
CHECK_CERTIFICATE_RATIO = "certificate-ratio"
CHECK_CERTIFICATE_ZEROS = "certificate-zero-fraction"
CHECK_CERTIFICATE_GAUSS = "certificate-gauss-product"
CHECK_CERTIFICATE_MULTIPLICITY = "certificate-multiplicity-factor"
CHECK_CERTIFICATE_ERROR = "certificate-error"
CHECK_NUMERICAL_FAILURE = "numerical-failure"
CHECK_HGRID = "h-grid-identity"
CHECK_H_CONSISTENCY = "h-route-agreement"
CHECK_SIEVE_CENTRES = "large-sieve-centres"

# Commands
COMMAND_GAUSS = "gauss"
COMMAND_MAHLER = "mahler"
COMMAND_ZEROS = "zeros"
COMMAND_ARCS = "arcs"
COMMAND_SIEVE = "sieve"
COMMAND_CDELTA = "cdelta"
COMMAND_DISTRIBUTION = "distribution"
COMMAND_ENSEMBLE = "ensemble"
COMMAND_RS = "rs"
COMMAND_CERTIFY = "certify"
COMMAND_REPORT = "report"

# CSV tables (column order is part of the output format)
TABLE_GAUSS = ("p", "p_mod_4", "max_modulus_error", "abs_f_at_one", "sign_ok")
TABLE_ZEROS = ("p", "refinement", "zero_count", "lower_bound", "fraction")
TABLE_SIGNS = ("p", "agreements", "expected")
TABLE_MAHLER = (
    "p",
    "m2",
    "m2_expected",
    "m1",
    "m0_roots",
    "m0_quadrature",
    "relative_gap",
)
TABLE_ARCS = (
    "p",
    "delta",
    "gamma",
    "eta",
    "n_big_center",
    "n_small_deriv",
    "n_qualifying",
    "n_inconsistent",
)
TABLE_SIEVE = ("p", "m_bad", "m_bound", "lhs", "rhs", "final_bound", "holds")
TABLE_CDELTA = ("delta", "value", "reflected", "truncation_K", "cutoff_X")
TABLE_DISTRIBUTION = ("p", "delta", "fraction", "c_delta", "difference", "ties")
TABLE_ENSEMBLE = ("n", "q", "samples", "mean_ratio", "stderr", "limit")
TABLE_RS = ("n", "degree", "max_complementary_error", "m0_p", "m0_q", "m0_ratio")
TABLE_CERTIFICATES = (
    "p",
    "m",
    "eta",
    "delta",
    "k_zeros",
    "gauss_product",
    "bound",
    "direct_m0",
    "ratio",
    "holds",
)
TABLE_MAX_MODULUS = ("p", "max_val", "min_val", "log_constant")

# Progress events
EVENT_SUITE_STARTED = "suite_started"
EVENT_PRIME_FINISHED = "prime_finished"
EVENT_SUITE_FINISHED = "suite_finished"
EVENT_KINDS = (EVENT_SUITE_STARTED, EVENT_PRIME_FINISHED, EVENT_SUITE_FINISHED)

# Exit codes
EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

DEFAULT_THREADS = 1
DEFAULT_OUT_DIR = "reports"

# Suite defaults (desk scale)
DEFAULT_GAUSS_PMIN = 3
DEFAULT_GAUSS_PMAX = 1009
GAUSS_TOL = 1e-8
DEFAULT_SIGNS_PMAX = 5000
DEFAULT_ZEROS_PMIN = 11
DEFAULT_ZEROS_PMAX = 1009
DEFAULT_FRACTION_PRIME = 10007
DEFAULT_FRACTION_REFINEMENT = 8
ZERO_FRACTION_BAND = (0.49, 0.52)
ZERO_RESIDUAL_TOL = 1e-6
DEFAULT_MAHLER_PMAX = 1009
DEFAULT_M0_PMAX = 199
MAHLER_SUITE_SAMPLES = DEFAULT_M0_SAMPLES
PARSEVAL_TOL = 1e-10
ESTIMATOR_TOL = 1e-3
SMALL_PRIME_M0_TOL = 1e-6
DEFAULT_SUBARC_PRIME = 1009
SUBARC_EPSILON = 0.1
MAX_MODULUS_SAMPLES_PER_PRIME = 16
DEFAULT_PRODUCT_INSTANCES = 1000
DEFAULT_PRODUCT_DEGREE = 64
DEFAULT_PRODUCT_PRIME = 67
DEFAULT_ARCS_PMIN = 11
DEFAULT_ARCS_PMAX = 499
DEFAULT_SIEVE_INSTANCES = 1000
DEFAULT_SIEVE_DEGREE = 64
DEFAULT_DELTAS = (0.1, 0.25, 0.5, 1.0)
SMALL_DELTA = 0.001
SMALL_DELTA_BAND = 0.01
ENVELOPE_POINT = 5.0
ORACLE_STEP = 1e-5
ORACLE_CUTOFF = 60.0
ORACLE_TRUNCATION = 200
ORACLE_CHUNK = 4096
ORACLE_DELTA = 0.5
ORACLE_TOL = 1e-4
DEFAULT_DISTRIBUTION_PRIME = 10007
DEFAULT_DISTRIBUTION_DELTA = 0.5
DISTRIBUTION_BAND = 0.05
DISTRIBUTION_GRID = (-1.0, -0.75, -0.5, -0.25, 0.25, 0.5, 0.75, 1.0)
DEFAULT_ENSEMBLE_SAMPLES = 2000
DEFAULT_ENSEMBLE_N2 = 32
DEFAULT_ENSEMBLE_N0 = 64
ENSEMBLE_M2_BAND = (0.95, 1.05)
ENSEMBLE_M0_BAND = (0.70, 0.80)
DEFAULT_RS_ORDER = 12
RS_COMPLEMENTARY_TOL = 1e-8
RS_M0_FLOOR = 0.5
DEFAULT_CERTIFY_PMIN = 101
DEFAULT_CERTIFY_PMAX = 499
CERTIFICATE_RATIO_FLOOR = 0.5
CERTIFICATE_ZERO_FRACTION = 0.25
CERTIFICATE_FLOOR_PRIME = 101
MULTIPLICITY_FACTOR_FLOOR = 0.9
