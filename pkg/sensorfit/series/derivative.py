"""Finite-difference derivative of a series."""

import numpy as np

from sensorfit.exceptions import TooFewPointsError
from sensorfit.series.models import DerivativeSeries, TimeSeries


def finite_diff_derivative(series: TimeSeries) -> DerivativeSeries:
    """Backward difference quotients (v[i+1] - v[i]) / (t[i+1] - t[i]).

    Rates are aligned to times[1:]; no smoothing is applied.

    Raises:
        TooFewPointsError: If the series has fewer than two samples.
    """
    if len(series) < 2:
        raise TooFewPointsError(2, len(series), "finite_diff_derivative")

    rates = np.diff(series.values) / np.diff(series.times)
    rate_unit = f"{series.value_unit}/{series.time_unit}" if series.value_unit else ""
    return DerivativeSeries(
        times=series.times[1:],
        rates=rates,
        time_unit=series.time_unit,
        rate_unit=rate_unit,
    )
