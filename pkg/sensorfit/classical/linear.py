"""Least-squares straight line."""

from typing import Union

import numpy as np
from scipy import stats

from sensorfit.classical.models import LinearModel
from sensorfit.exceptions import TooFewPointsError
from sensorfit.series.models import ArrayLike, TimeSeries


def fit_linear(series: TimeSeries) -> LinearModel:
    """Fit Y = beta0 + beta1 X minimizing the sum of squared residuals.

    Raises:
        TooFewPointsError: If the series has fewer than two samples.
    """
    if len(series) < 2:
        raise TooFewPointsError(2, len(series), "fit_linear")
    result = stats.linregress(series.times, series.values)
    return LinearModel(beta0=float(result.intercept), beta1=float(result.slope))


def eval_linear(model: LinearModel, x: Union[float, ArrayLike]) -> Union[float, np.ndarray]:
    """Evaluate beta0 + beta1 x at a scalar or array of points."""
    if np.isscalar(x):
        return model.beta0 + model.beta1 * float(x)
    return model.beta0 + model.beta1 * np.asarray(x, dtype=np.float64)
