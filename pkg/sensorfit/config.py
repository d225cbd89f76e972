"""Built-in defaults for sensorfit.

User-level overrides live in ~/.sensorfit/config.yaml.
Use 'sensorfit config' commands to inspect or modify them.
"""

from enum import Enum


class Method(Enum):
    """Interpolation methods known to the comparison harness."""

    NEURAL = "neural"
    LINEAR = "linear"
    POLYNOMIAL = "polynomial"
    SPLINE = "spline"


class SignalKind(Enum):
    """Closed-form clean signals the synthetic generator can produce."""

    SUM_OF_SINES = "sum-of-sines"
    RAMP_PLUS_SINE = "ramp-plus-sine"
    PIECEWISE_SMOOTH = "piecewise-smooth"


# ============================================================
# NETWORK AND TRAINING DEFAULTS
# ============================================================

# Dense(1, linear) -> 128/64/32/64/128 relu -> Dense(1, linear)
DEFAULT_ARCHITECTURE = "1L,128R,64R,32R,64R,128R,1L"
DEFAULT_INPUT_WIDTH = 1
DEFAULT_EPOCHS = 1000
DEFAULT_SEED = 0
DEFAULT_BATCH = "full"
DEFAULT_MINI_BATCH_SIZE = 32

# Adam (Keras defaults)
DEFAULT_LEARNING_RATE = 1e-3
DEFAULT_BETA1 = 0.9
DEFAULT_BETA2 = 0.999
DEFAULT_EPSILON = 1e-7

DEFAULT_LOG_EVERY = 100


# ============================================================
# PREDICTION AND COMPARISON DEFAULTS
# ============================================================

DEFAULT_GRID_POINTS = 10000
DEFAULT_METHODS = (Method.LINEAR, Method.NEURAL, Method.POLYNOMIAL, Method.SPLINE)
DEFAULT_SYNTHETIC_PRESET = "default"


# ============================================================
# CLASSICAL FITTING LIMITS
# ============================================================

POLYNOMIAL_MAX_POINTS = 30
PIVOT_TOLERANCE = 1e-12


# ============================================================
# FILES
# ============================================================

CSV_TIME_COLUMN = "Time"
CSV_VALUE_COLUMN = "Message"
CSV_DERIVATIVE_COLUMN = "Derivative"

MODEL_FILE_NAME = "model.model.json"
LOSS_FILE_NAME = "loss.csv"
PREDICTION_FILE_NAME = "interpolated.csv"
DERIVATIVE_FILE_NAME = "derivative.csv"
REPORT_CSV_NAME = "report.csv"
REPORT_TEXT_NAME = "report.txt"
REPORT_DERIVATIVES_NAME = "derivatives.csv"
DERIVATIVE_PLOT_NAME = "derivatives.svg"
INTERPOLATION_PLOT_NAME = "interpolation.svg"


# ============================================================
# LEAD-DISTANCE SAMPLE RESCALE CONSTANTS
# ============================================================
# The lead-distance sample started at this POSIX time and ended at the
# second one; its message values spanned 33..112.

LEAD_DIST_START_TIME = 1594247088.289515
LEAD_DIST_END_TIME = 1594247110.290019
LEAD_DIST_MESSAGE_MIN = 33.0
LEAD_DIST_MESSAGE_MAX = 112.0


def lead_distance_params():
    """Normalization params of the lead-distance sample.

    Returns:
        NormalizationParams built from the rescale constants above.
    """
    from sensorfit.series.models import NormalizationParams

    return NormalizationParams(
        t_start=LEAD_DIST_START_TIME,
        t_end=LEAD_DIST_END_TIME,
        v_min=LEAD_DIST_MESSAGE_MIN,
        v_max=LEAD_DIST_MESSAGE_MAX,
    )
