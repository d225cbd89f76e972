"""Exact polynomial interpolation through the Vandermonde system.

The system is solved by LU elimination with partial pivoting rather than an
explicit inverse.
"""

import logging
from typing import Union

import numpy as np
from numpy.polynomial import polynomial as P
from scipy import linalg

from sensorfit.classical.exceptions import SingularSystemError, TooManyPointsError
from sensorfit.classical.models import PolynomialModel
from sensorfit.config import PIVOT_TOLERANCE, POLYNOMIAL_MAX_POINTS
from sensorfit.series.models import ArrayLike, TimeSeries

logger = logging.getLogger(__name__)


def vandermonde(x: ArrayLike, k: int) -> np.ndarray:
    """k x k-style matrix with rows [1, x_i, x_i^2, ..., x_i^(k-1)]."""
    return np.vander(np.asarray(x, dtype=np.float64), k, increasing=True)


def fit_polynomial(
    series: TimeSeries,
    max_points: int = POLYNOMIAL_MAX_POINTS,
    pivot_tolerance: float = PIVOT_TOLERANCE,
) -> PolynomialModel:
    """Fit the degree k-1 polynomial through all k samples.

    Args:
        series: Samples to interpolate, 1 <= k <= max_points.
        max_points: Hard cap on k.
        pivot_tolerance: Smallest acceptable |pivot| after elimination.

    Returns:
        PolynomialModel whose coefficients solve V a = y.

    Raises:
        TooManyPointsError: If k exceeds max_points.
        SingularSystemError: If a pivot falls below pivot_tolerance.
    """
    k = len(series)
    if k > max_points:
        raise TooManyPointsError(k, max_points)

    matrix = vandermonde(series.times, k)
    lu, piv = linalg.lu_factor(matrix, check_finite=False)
    smallest = float(np.min(np.abs(np.diag(lu))))
    if smallest < pivot_tolerance:
        raise SingularSystemError(smallest, pivot_tolerance)

    coefficients = linalg.lu_solve((lu, piv), series.values, check_finite=False)
    logger.debug("polynomial of degree %d, smallest pivot %.3e", k - 1, smallest)
    return PolynomialModel(coefficients=coefficients)


def eval_polynomial(model: PolynomialModel, x: Union[float, ArrayLike]) -> Union[float, np.ndarray]:
    """Horner evaluation of sum a_i x^i."""
    if np.isscalar(x):
        return float(P.polyval(float(x), model.coefficients))
    return P.polyval(np.asarray(x, dtype=np.float64), model.coefficients)
