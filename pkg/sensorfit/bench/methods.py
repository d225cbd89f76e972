"""Fit one interpolation method to a noisy series and evaluate it.

Every method is evaluated twice: at the sample times (to compare with the
clean signal) and on the dense grid (for derivative statistics). The spline
does not extrapolate, so grid points before the first sample are dropped
for it.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from sensorfit.classical.interpolator import fit_interpolator
from sensorfit.config import Method
from sensorfit.nn.models import LayerSpec, MlpModel, TrainConfig, TrainReport
from sensorfit.nn.network import build_mlp, predict
from sensorfit.nn.training import EpochCallback, train
from sensorfit.series.grid import extrapolated_mask, make_dense_grid
from sensorfit.series.models import ArrayLike, NormalizationParams, TimeSeries
from sensorfit.series.normalize import denormalize_values, normalize, normalize_times

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class NeuralFit:
    """A trained network with the normalization it was trained under.

    Calling it maps raw times to raw values.
    """

    model: MlpModel
    params: NormalizationParams
    report: TrainReport

    def __call__(self, times: ArrayLike) -> np.ndarray:
        return denormalize_values(predict(self.model, normalize_times(times, self.params)), self.params)


def fit_neural(
    series: TimeSeries,
    layers: Sequence[LayerSpec],
    config: TrainConfig,
    seed: int,
    known_params: Optional[NormalizationParams] = None,
    on_epoch: Optional[EpochCallback] = None,
) -> NeuralFit:
    """Normalize, build, and train a 1-in/1-out network.

    Args:
        series: Raw samples, or already normalized ones when known_params is given.
        layers: Architecture.
        config: Training settings.
        seed: Weight initialization seed.
        known_params: Treat series as already normalized and record these
            params as the original scale.
        on_epoch: Forwarded to train.
    """
    if known_params is None:
        scaled, params = normalize(series)
    else:
        scaled, params = series, known_params

    model = build_mlp(1, layers, seed)
    model, report = train(model, scaled, config, on_epoch=on_epoch)
    return NeuralFit(model=model, params=params, report=report)


@dataclass(frozen=True, eq=False)
class MethodFit:
    """Evaluations of a fitted method.

    Attributes:
        at_samples: Values at the noisy series' sample times.
        grid_times: Dense-grid times the method was evaluated on.
        grid_values: Values on grid_times.
        train_report: Training report for the neural method.
    """

    at_samples: np.ndarray
    grid_times: np.ndarray
    grid_values: np.ndarray
    train_report: Optional[TrainReport] = None


def run_method(
    method: Method,
    noisy: TimeSeries,
    grid_points: int,
    config: TrainConfig,
    layers: Sequence[LayerSpec],
    seed: int,
) -> MethodFit:
    """Fit method to noisy and evaluate it at the samples and on the dense grid."""
    grid = make_dense_grid(noisy.times, grid_points)

    if method is Method.NEURAL:
        fit = fit_neural(noisy, layers, config, seed)
        return MethodFit(
            at_samples=fit(noisy.times),
            grid_times=grid,
            grid_values=fit(grid),
            train_report=fit.report,
        )

    interpolator = fit_interpolator(noisy, method)
    if method is Method.SPLINE:
        dropped = extrapolated_mask(grid, noisy.times)
        logger.debug("spline: dropping %d extrapolated grid points", int(dropped.sum()))
        grid = grid[~dropped]
    return MethodFit(
        at_samples=interpolator(noisy.times),
        grid_times=grid,
        grid_values=interpolator(grid),
    )
