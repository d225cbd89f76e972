"""CLI command for training the interpolating network on a CSV."""

import logging
from pathlib import Path
from typing import Optional, Tuple

import numpy as np
import typer

from sensorfit.bench.methods import fit_neural
from sensorfit.cli.manifest import run_recorded
from sensorfit.cli.options import TrainOptions, resolve_training
from sensorfit.cli.utils import absolute, echo_outputs, error_boundary
from sensorfit.config import LOSS_FILE_NAME, MODEL_FILE_NAME, Method
from sensorfit.exceptions import TooFewPointsError
from sensorfit.model_io import GridAnchor, Provenance, save
from sensorfit.series.csvio import read_series_csv, write_columns_csv
from sensorfit.series.normalize import normalize_times

logger = logging.getLogger(__name__)


def _range(value: Optional[Tuple[Optional[float], Optional[float]]]) -> Optional[tuple[float, float]]:
    if value is None or value[0] is None:
        return None
    return (float(value[0]), float(value[1]))


def run_train(options: TrainOptions) -> list[Path]:
    """Train on options.input and write the model file and loss curve.

    Returns:
        Paths of the files written.
    """
    out_dir = Path(options.out_dir)
    series = read_series_csv(Path(options.input))
    if len(series) < 2:
        raise TooFewPointsError(2, len(series), "train")
    fit = fit_neural(
        series,
        options.layers(),
        options.train_config(),
        options.seed,
        known_params=options.known_params(),
    )

    scaled_times = series.times if options.already_normalized else normalize_times(series.times, fit.params)
    anchor = GridAnchor(
        first=float(scaled_times[0]), second=float(scaled_times[1]), last=float(scaled_times[-1]),
    )
    provenance = Provenance(
        method=Method.NEURAL.value,
        seed=options.seed,
        epochs=fit.report.epochs,
        final_loss=fit.report.final_loss,
    )
    model_path = out_dir / MODEL_FILE_NAME
    save(fit.model, fit.params, provenance, destination=model_path, anchor=anchor)

    history = np.asarray(fit.report.loss_history, dtype=np.float64)
    loss_path = write_columns_csv(
        out_dir / LOSS_FILE_NAME,
        {"Epoch": np.arange(1, history.size + 1), "Loss": history},
    )
    logger.info(
        "trained %d epochs: loss %.6g -> %.6g", fit.report.epochs, fit.report.initial_loss, fit.report.final_loss,
    )
    return [model_path, loss_path]


def train_command(
    input_csv: Path = typer.Argument(..., help="Time,Message CSV to train on"),
    out_dir: Path = typer.Option(Path("out"), "--out-dir", "-o", help="Directory for the model and loss files"),
    epochs: Optional[int] = typer.Option(None, "--epochs", help="Training epochs (default 1000)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Initialization and shuffle seed (default 0)"),
    batch: Optional[str] = typer.Option(None, "--batch", help="'full', 'mini' or a batch size"),
    learning_rate: Optional[float] = typer.Option(None, "--lr", help="Adam learning rate (default 1e-3)"),
    architecture: Optional[str] = typer.Option(
        None,
        "--architecture",
        help="Layer list such as 1L,128R,64R,32R,64R,128R,1L",
    ),
    already_normalized: bool = typer.Option(
        False,
        "--already-normalized",
        help="Train on the file as is; it is already scaled to [0, 1]",
    ),
    time_range: Optional[Tuple[float, float]] = typer.Option(
        None,
        "--time-range",
        help="Original START END times of already-normalized data",
    ),
    value_range: Optional[Tuple[float, float]] = typer.Option(
        None,
        "--value-range",
        help="Original MIN MAX values of already-normalized data",
    ),
) -> None:
    """Train the interpolating network and save it as a model file."""
    with error_boundary():
        options = TrainOptions(
            out_dir=absolute(out_dir),
            input=absolute(input_csv),
            already_normalized=already_normalized,
            time_range=_range(time_range),
            value_range=_range(value_range),
            **resolve_training(epochs, seed, batch, learning_rate, architecture),
        )
        outputs, manifest = run_recorded("train", options, options.inputs(), Path(options.out_dir), run_train)
        echo_outputs(outputs, manifest)
