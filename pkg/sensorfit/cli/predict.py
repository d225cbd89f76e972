"""CLI command for evaluating a model file on the dense grid."""

import logging
from pathlib import Path
from typing import Optional

import numpy as np
import typer

from sensorfit import global_config
from sensorfit.cli.manifest import run_recorded
from sensorfit.cli.options import PredictOptions
from sensorfit.cli.plots import plot_interpolation
from sensorfit.cli.utils import absolute, echo_outputs, error_boundary
from sensorfit.config import INTERPOLATION_PLOT_NAME, PREDICTION_FILE_NAME
from sensorfit.model_io import LoadedModel, ModelKind, load_file
from sensorfit.series.csvio import read_series_csv, write_series_csv
from sensorfit.series.grid import extrapolated_mask, make_dense_grid
from sensorfit.series.models import NormalizationParams
from sensorfit.series.normalize import denormalize_times, denormalize_values

logger = logging.getLogger(__name__)


def prediction_grid(loaded: LoadedModel, points: int) -> tuple[np.ndarray, np.ndarray]:
    """Dense grid in model input units and its extrapolated mask.

    Without a grid anchor the grid covers [0, 1] and nothing is flagged.
    """
    if loaded.grid_anchor is None:
        logger.warning("model file has no grid anchor; predicting on [0, 1]")
        grid = np.linspace(0.0, 1.0, points)
        return grid, np.zeros(grid.shape, dtype=bool)

    anchor = loaded.grid_anchor.times()
    grid = make_dense_grid(anchor, points)
    return grid, extrapolated_mask(grid, [anchor[0], anchor[-1]])


def run_predict(options: PredictOptions) -> list[Path]:
    """Predict on the dense grid and write it in original units.

    Returns:
        Paths of the files written.
    """
    out_dir = Path(options.out_dir)
    loaded = load_file(options.model)
    params = loaded.params or NormalizationParams.identity()

    grid, extrapolated = prediction_grid(loaded, options.points)
    if loaded.kind is ModelKind.SPLINE and extrapolated.any():
        logger.debug("spline: dropping %d extrapolated grid points", int(extrapolated.sum()))
        grid = grid[~extrapolated]
        extrapolated = extrapolated[~extrapolated]

    times = denormalize_times(grid, params)
    values = denormalize_values(loaded(grid), params)

    comments = []
    if extrapolated.any():
        count = int(extrapolated.sum())
        logger.warning("%d grid point(s) lie outside the training data", count)
        first = float(denormalize_times([loaded.grid_anchor.first], params)[0])
        comments.append(f"first {count} row(s) extrapolated: before the first training sample at Time={first!r}")
    csv_path = write_series_csv(out_dir / PREDICTION_FILE_NAME, times, values, comments=comments)
    outputs = [csv_path]

    if options.data:
        original = read_series_csv(Path(options.data))
        outputs.append(plot_interpolation(times, values, original, out_dir / INTERPOLATION_PLOT_NAME))
    return outputs


def predict_command(
    model: Path = typer.Argument(..., help="Model file written by 'sensorfit train'"),
    out_dir: Path = typer.Option(Path("out"), "--out-dir", "-o", help="Directory for the prediction files"),
    points: Optional[int] = typer.Option(None, "--points", help="Dense grid size (default 10000)"),
    data: Optional[Path] = typer.Option(
        None,
        "--data",
        help="Original CSV; also write interpolation.svg with it under the prediction",
    ),
) -> None:
    """Predict on a dense time grid and write it as a Time,Message CSV."""
    with error_boundary():
        options = PredictOptions(
            out_dir=absolute(out_dir),
            model=absolute(model),
            points=global_config.get_value("predict.points", points),
            data=absolute(data) if data is not None else None,
        )
        outputs, manifest = run_recorded("predict", options, options.inputs(), Path(options.out_dir), run_predict)
        echo_outputs(outputs, manifest)
