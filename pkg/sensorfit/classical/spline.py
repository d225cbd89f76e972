"""Natural cubic spline through every sample.

Interior second derivatives M_1..M_{n-2} solve the tridiagonal system

    h_{i-1} M_{i-1} + 2 (h_{i-1} + h_i) M_i + h_i M_{i+1}
        = 6 ((y_{i+1} - y_i) / h_i - (y_i - y_{i-1}) / h_{i-1})

with M_0 = M_{n-1} = 0.
"""

from typing import Union

import numpy as np
from scipy import linalg

from sensorfit.classical.exceptions import OutOfRangeError
from sensorfit.classical.models import SplineModel
from sensorfit.exceptions import TooFewPointsError
from sensorfit.series.models import ArrayLike, TimeSeries


def natural_second_derivatives(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Second derivative of the natural spline at every knot."""
    h = np.diff(x)
    slopes = np.diff(y) / h
    m = x.size - 2

    banded = np.zeros((3, m))
    banded[0, 1:] = h[1:-1]
    banded[1, :] = 2.0 * (h[:-1] + h[1:])
    banded[2, :-1] = h[1:-1]
    rhs = 6.0 * (slopes[1:] - slopes[:-1])

    second = np.zeros(x.size)
    second[1:-1] = linalg.solve_banded((1, 1), banded, rhs, check_finite=False)
    return second


def fit_spline(series: TimeSeries) -> SplineModel:
    """Fit the natural (zero end curvature) C2 cubic spline through every sample.

    Raises:
        TooFewPointsError: If the series has fewer than three samples.
    """
    if len(series) < 3:
        raise TooFewPointsError(3, len(series), "fit_spline")

    x = series.times
    y = series.values
    h = np.diff(x)
    second = natural_second_derivatives(x, y)

    coefficients = np.empty((x.size - 1, 4))
    coefficients[:, 0] = (second[1:] - second[:-1]) / (6.0 * h)
    coefficients[:, 1] = second[:-1] / 2.0
    coefficients[:, 2] = np.diff(y) / h - h * (2.0 * second[:-1] + second[1:]) / 6.0
    coefficients[:, 3] = y[:-1]

    return SplineModel(knot_times=x, knot_values=y, coefficients=coefficients)


def eval_spline(
    model: SplineModel,
    x: Union[float, ArrayLike],
    derivative: int = 0,
) -> Union[float, np.ndarray]:
    """Evaluate the spline (or its first/second derivative) without extrapolating.

    The segment is located by binary search; a point on an interior knot
    belongs to the segment that starts there.

    Raises:
        OutOfRangeError: If any point lies outside [first knot, last knot].
        ValueError: If derivative is not 0, 1 or 2.
    """
    if derivative not in (0, 1, 2):
        raise ValueError(f"derivative must be 0, 1 or 2, got {derivative}")

    scalar = np.isscalar(x)
    points = np.atleast_1d(np.asarray(x, dtype=np.float64))
    low, high = model.knot_times[0], model.knot_times[-1]
    outside = np.flatnonzero((points < low) | (points > high) | ~np.isfinite(points))
    if outside.size:
        raise OutOfRangeError(float(points[outside[0]]), float(low), float(high))

    segment = np.searchsorted(model.knot_times, points, side="right") - 1
    segment = np.clip(segment, 0, model.n_knots - 2)
    s = points - model.knot_times[segment]
    c3, c2, c1, c0 = (model.coefficients[segment, j] for j in range(4))

    if derivative == 0:
        result = ((c3 * s + c2) * s + c1) * s + c0
    elif derivative == 1:
        result = (3.0 * c3 * s + 2.0 * c2) * s + c1
    else:
        result = 6.0 * c3 * s + 2.0 * c2

    return float(result[0]) if scalar else result
