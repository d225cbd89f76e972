"""Classical interpolation baselines for sensorfit.

Provides least-squares linear regression, exact polynomial interpolation via
the Vandermonde system, and the natural cubic spline, plus a wrapper that
fits any of them in normalized coordinates.
"""

from sensorfit.classical.exceptions import (
    InterpolationError,
    OutOfRangeError,
    SingularSystemError,
    TooManyPointsError,
)
from sensorfit.classical.models import LinearModel, PolynomialModel, SplineModel
from sensorfit.classical.linear import eval_linear, fit_linear
from sensorfit.classical.polynomial import eval_polynomial, fit_polynomial, vandermonde
from sensorfit.classical.spline import eval_spline, fit_spline, natural_second_derivatives
from sensorfit.classical.interpolator import (
    ClassicalInterpolator,
    fit_interpolator,
    fitting_params,
)


__all__ = [
    "InterpolationError",
    "TooManyPointsError",
    "SingularSystemError",
    "OutOfRangeError",
    "LinearModel",
    "PolynomialModel",
    "SplineModel",
    "fit_linear",
    "eval_linear",
    "fit_polynomial",
    "eval_polynomial",
    "vandermonde",
    "fit_spline",
    "eval_spline",
    "natural_second_derivatives",
    "ClassicalInterpolator",
    "fit_interpolator",
    "fitting_params",
]
