"""Fit a classical method and evaluate it in the series' own units.

Fitting happens in normalized coordinates by default: raw POSIX timestamps
make x^i overflow long before the Vandermonde cap is reached.
"""

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from sensorfit.classical.linear import eval_linear, fit_linear
from sensorfit.classical.models import LinearModel, PolynomialModel, SplineModel
from sensorfit.classical.polynomial import eval_polynomial, fit_polynomial
from sensorfit.classical.spline import eval_spline, fit_spline
from sensorfit.config import Method
from sensorfit.series.models import ArrayLike, NormalizationParams, TimeSeries
from sensorfit.series.normalize import (
    denormalize_values,
    normalize_times,
    normalize_values,
)

ClassicalModel = Union[LinearModel, PolynomialModel, SplineModel]

_FITTERS: dict[Method, tuple[Callable, Callable]] = {
    Method.LINEAR: (fit_linear, eval_linear),
    Method.POLYNOMIAL: (fit_polynomial, eval_polynomial),
    Method.SPLINE: (fit_spline, eval_spline),
}


def fitting_params(series: TimeSeries) -> NormalizationParams:
    """Min-max params of a series, widening a constant value axis to unit span."""
    v_min = float(np.min(series.values))
    v_max = float(np.max(series.values))
    if v_max == v_min:
        v_max = v_min + 1.0
    t_end = float(series.times[-1])
    t_start = float(series.times[0])
    if t_end == t_start:
        t_end = t_start + 1.0
    return NormalizationParams(t_start=t_start, t_end=t_end, v_min=v_min, v_max=v_max)


@dataclass(frozen=True)
class ClassicalInterpolator:
    """A fitted classical model plus the coordinates it was fitted in.

    Attributes:
        method: Which classical method produced the model.
        model: The fitted model, in normalized units when params is set.
        params: Normalization applied before fitting, or None for raw fitting.
    """

    method: Method
    model: ClassicalModel
    params: Union[NormalizationParams, None] = None

    def __call__(self, times: ArrayLike) -> np.ndarray:
        """Evaluate at raw times, returning raw values."""
        _, evaluate = _FITTERS[self.method]
        times = np.asarray(times, dtype=np.float64)
        if self.params is None:
            return np.asarray(evaluate(self.model, times), dtype=np.float64)
        inner = np.asarray(evaluate(self.model, normalize_times(times, self.params)))
        return denormalize_values(inner, self.params)


def fit_interpolator(
    series: TimeSeries,
    method: Method,
    normalized: bool = True,
) -> ClassicalInterpolator:
    """Fit a classical method to a series.

    Args:
        series: Samples to fit.
        method: LINEAR, POLYNOMIAL or SPLINE.
        normalized: Fit in [0, 1] coordinates (default) or in raw units.

    Returns:
        A callable interpolator evaluating in the series' own units.
    """
    if method not in _FITTERS:
        raise ValueError(f"{method.value} is not a classical method")
    fit, _ = _FITTERS[method]

    if not normalized:
        return ClassicalInterpolator(method=method, model=fit(series))

    params = fitting_params(series)
    scaled = TimeSeries(
        normalize_times(series.times, params),
        normalize_values(series.values, params),
    )
    return ClassicalInterpolator(method=method, model=fit(scaled), params=params)
