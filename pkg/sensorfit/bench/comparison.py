"""Quantitative comparison of interpolation methods on a noisy series."""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional, Sequence

import numpy as np

from sensorfit.bench.exceptions import BenchError
from sensorfit.bench.methods import run_method
from sensorfit.bench.models import ComparisonReport, MethodRow
from sensorfit.config import DEFAULT_GRID_POINTS, DEFAULT_SEED, Method
from sensorfit.exceptions import LengthMismatchError, SensorFitError
from sensorfit.nn.architecture import DEFAULT_LAYERS
from sensorfit.nn.models import LayerSpec, TrainConfig
from sensorfit.series.derivative import finite_diff_derivative
from sensorfit.series.metrics import rmse
from sensorfit.series.models import ArrayLike, DerivativeSeries, TimeSeries

logger = logging.getLogger(__name__)

ORIGINAL_KEY = "original"


def _std(values: np.ndarray) -> float:
    return float(np.std(values))


def _grid_derivative(times: np.ndarray, values: np.ndarray) -> DerivativeSeries:
    if times.size < 2:
        raise BenchError(f"only {times.size} grid point(s) left to differentiate")
    return DerivativeSeries(
        times=times[1:],
        rates=np.diff(values) / np.diff(times),
        time_unit="",
        rate_unit="",
    )


def _evaluate(
    method: Method,
    noisy: TimeSeries,
    clean: Optional[TimeSeries],
    original_std: float,
    grid_points: int,
    config: TrainConfig,
    layers: Sequence[LayerSpec],
    seed: int,
) -> tuple[MethodRow, Optional[DerivativeSeries]]:
    """One row; failures become an error row instead of raising."""
    started = time.perf_counter()
    try:
        fit = run_method(method, noisy, grid_points, config, layers, seed)
        derivative = _grid_derivative(fit.grid_times, fit.grid_values)
        row = MethodRow(
            method=method,
            rmse_to_clean=rmse(fit.at_samples, clean.values) if clean is not None else None,
            noisy_rmse_to_clean=rmse(noisy.values, clean.values) if clean is not None else None,
            original_derivative_std=original_std,
            interpolated_derivative_std=_std(derivative.rates),
        )
        metrics = [v for v in (row.rmse_to_clean, row.interpolated_derivative_std) if v is not None]
        if not np.all(np.isfinite(metrics)):
            raise BenchError("non-finite metric")
    except (SensorFitError, ValueError, FloatingPointError) as e:
        logger.warning("%s failed: %s", method.value, e)
        row = MethodRow(method=method, error=f"{type(e).__name__}: {e}")
        derivative = None

    row = row.model_copy(update={"wall_time": time.perf_counter() - started})
    logger.info("%s done in %.2fs", method.value, row.wall_time)
    return row, derivative


def run_comparison(
    noisy: TimeSeries,
    clean: Optional[TimeSeries],
    methods: Iterable[Method],
    grid_points: int = DEFAULT_GRID_POINTS,
    train_config: Optional[TrainConfig] = None,
    layers: Sequence[LayerSpec] = DEFAULT_LAYERS,
    seed: int = DEFAULT_SEED,
    clean_rates: Optional[ArrayLike] = None,
    workers: Optional[int] = None,
) -> ComparisonReport:
    """Fit every method to the noisy series and measure it.

    Each method is fitted on noisy, compared with clean at the sample times,
    and differentiated on the dense grid. A method that raises gets a row
    with its error and no metrics; the others still run.

    Args:
        noisy: Observed samples.
        clean: Ground truth on the same times, or None for real data.
        methods: Methods to run; an empty set gives an empty report.
        grid_points: Dense grid size.
        train_config: Training settings for the neural method.
        layers: Neural architecture.
        seed: Neural weight initialization seed.
        clean_rates: Exact derivative of the clean signal at the sample
            times, for the clean_derivative_std reference.
        workers: Thread count; rows are independent so the result does not
            depend on it.

    Returns:
        Report with rows sorted by method name.

    Raises:
        LengthMismatchError: If clean has a different length from noisy.
        BenchError: If clean's times differ from noisy's.
    """
    if clean is not None:
        if len(clean) != len(noisy):
            raise LengthMismatchError(len(noisy), len(clean), "noisy and clean series")
        if not np.array_equal(clean.times, noisy.times):
            raise BenchError("noisy and clean series must share sample times")

    config = train_config or TrainConfig()
    selected = sorted(set(methods), key=lambda m: m.value)
    original = finite_diff_derivative(noisy)
    original_std = _std(original.rates)

    def evaluate(method: Method) -> tuple[MethodRow, Optional[DerivativeSeries]]:
        return _evaluate(method, noisy, clean, original_std, grid_points, config, layers, seed)

    if selected:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(evaluate, selected))
    else:
        results = []

    derivatives = {ORIGINAL_KEY: original}
    for row, derivative in results:
        if derivative is not None:
            derivatives[row.method.value] = derivative

    return ComparisonReport(
        rows=[row for row, _ in results],
        grid_points=grid_points,
        n_samples=len(noisy),
        clean_derivative_std=_std(np.asarray(clean_rates, dtype=np.float64)) if clean_rates is not None else None,
        derivatives=derivatives,
    )
