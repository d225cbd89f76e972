"""Training loop: Adam on mean squared error, no regularization.

The network is meant to overfit the samples; there is no early stopping
and no validation split.
"""

import logging
import time
from typing import Callable, Optional

import numpy as np

from sensorfit.nn.exceptions import DivergenceError, NetworkError
from sensorfit.nn.loss import mse_loss
from sensorfit.nn.models import AdamState, MlpModel, TrainConfig, TrainReport
from sensorfit.nn.network import backward, forward, predict
from sensorfit.nn.optim import adam_step
from sensorfit.series.models import TimeSeries

logger = logging.getLogger(__name__)

EpochCallback = Callable[[int, float], None]


def _batches(n: int, config: TrainConfig, rng: np.random.Generator) -> list[np.ndarray]:
    """Index arrays of one epoch's batches."""
    if config.batch_size is None or config.batch_size >= n:
        return [np.arange(n)]
    order = rng.permutation(n) if config.shuffle else np.arange(n)
    return [order[i:i + config.batch_size] for i in range(0, n, config.batch_size)]


def _full_loss(model: MlpModel, series: TimeSeries) -> float:
    loss, _ = mse_loss(predict(model, series.times), series.values)
    return loss


def train(
    model: MlpModel,
    series: TimeSeries,
    config: TrainConfig,
    on_epoch: Optional[EpochCallback] = None,
) -> tuple[MlpModel, TrainReport]:
    """Fit a 1-in/1-out network to a normalized series.

    Runs config.epochs passes; each pass takes one Adam step per batch.
    Batches are drawn from a generator seeded with config.seed, so the same
    model, series and config always give the same result.

    Args:
        model: Initial network (not modified).
        series: Training samples, expected in [0, 1] on both axes.
        config: Loop and optimizer settings.
        on_epoch: Called as on_epoch(epoch, mean_batch_loss) after every epoch.

    Returns:
        Tuple of (trained model, report).

    Raises:
        DivergenceError: If a loss or a parameter becomes non-finite.
        ShapeMismatchError: If the model is not 1-in/1-out.
    """
    times = series.times
    values = series.values
    if times.min() < 0.0 or times.max() > 1.0 or values.min() < 0.0 or values.max() > 1.0:
        logger.warning("training data is not normalized to [0, 1]; results may be poor")

    rng = np.random.default_rng(config.seed)
    inputs = times.reshape(-1, 1)
    targets = values.reshape(-1, 1)
    n = len(series)

    initial_loss = _full_loss(model, series)
    logger.info(
        "training %d parameters on %d samples for %d epochs (initial loss %.6g)",
        model.parameter_count, n, config.epochs, initial_loss,
    )

    started = time.perf_counter()
    params = model.parameters()
    state = AdamState.zeros_like(params)
    history: list[float] = []

    for epoch in range(config.epochs):
        batch_losses = []
        for indices in _batches(n, config, rng):
            outputs, cache = forward(model, inputs[indices])
            loss, gradient = mse_loss(outputs, targets[indices])
            if not np.isfinite(loss):
                raise DivergenceError(epoch, loss)
            batch_losses.append(loss)

            grads = backward(model, cache, gradient)
            params, state = adam_step(params, grads, state, config)
            try:
                model = model.with_parameters(params)
            except NetworkError as e:
                raise DivergenceError(epoch, float("nan")) from e

        epoch_loss = float(np.mean(batch_losses))
        if not np.isfinite(epoch_loss):
            raise DivergenceError(epoch, epoch_loss)
        history.append(epoch_loss)

        logger.debug("epoch %d/%d loss %.6g", epoch + 1, config.epochs, epoch_loss)
        if (epoch + 1) % config.log_every == 0 or epoch + 1 == config.epochs:
            logger.info("epoch %d/%d loss %.6g", epoch + 1, config.epochs, epoch_loss)
        if on_epoch is not None:
            on_epoch(epoch, epoch_loss)

    wall_time = time.perf_counter() - started
    final_loss = _full_loss(model, series)
    if not np.isfinite(final_loss):
        raise DivergenceError(config.epochs - 1, final_loss)

    report = TrainReport(
        loss_history=history,
        initial_loss=initial_loss,
        final_loss=final_loss,
        wall_time=wall_time,
        seed=config.seed,
        epochs=config.epochs,
        steps=state.t,
    )
    logger.info("finished in %.2fs, final loss %.6g", wall_time, final_loss)
    return model, report
