"""Min-max normalization of both series axes and its inverse.

Contains:
- normalize: Rescale a series to [0, 1] on both axes
- normalize_times / normalize_values: Apply existing params to new data
- denormalize_times / denormalize_values: Map normalized data back
"""

import numpy as np

from sensorfit.series.exceptions import DegenerateSpanError
from sensorfit.series.models import ArrayLike, NormalizationParams, TimeSeries


def normalize(series: TimeSeries) -> tuple[TimeSeries, NormalizationParams]:
    """Rescale a series so its first/last time and min/max value map to 0/1.

    Args:
        series: A validated series with at least two samples and non-constant values.

    Returns:
        Tuple of (normalized series, params that undo it).

    Raises:
        DegenerateSpanError: If the time span or value span is zero.
    """
    if len(series) < 2:
        raise DegenerateSpanError("a single sample has no time span to normalize")
    params = NormalizationParams(
        t_start=float(series.times[0]),
        t_end=float(series.times[-1]),
        v_min=float(np.min(series.values)),
        v_max=float(np.max(series.values)),
    )
    normalized = TimeSeries(
        normalize_times(series.times, params),
        normalize_values(series.values, params),
        time_unit="",
        value_unit="",
    )
    return normalized, params


def normalize_times(times: ArrayLike, params: NormalizationParams) -> np.ndarray:
    """Apply (t - t_start) / (t_end - t_start)."""
    times = np.asarray(times, dtype=np.float64)
    return (times - params.t_start) / (params.t_end - params.t_start)


def normalize_values(values: ArrayLike, params: NormalizationParams) -> np.ndarray:
    """Apply (v - v_min) / (v_max - v_min)."""
    values = np.asarray(values, dtype=np.float64)
    return (values - params.v_min) / (params.v_max - params.v_min)


def denormalize_times(times: ArrayLike, params: NormalizationParams) -> np.ndarray:
    """Apply t * (t_end - t_start) + t_start."""
    times = np.asarray(times, dtype=np.float64)
    return times * (params.t_end - params.t_start) + params.t_start


def denormalize_values(values: ArrayLike, params: NormalizationParams) -> np.ndarray:
    """Apply v * (v_max - v_min) + v_min."""
    values = np.asarray(values, dtype=np.float64)
    return values * (params.v_max - params.v_min) + params.v_min
