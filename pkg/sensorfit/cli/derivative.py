"""CLI command for the finite-difference derivative of a CSV."""

from pathlib import Path

import typer

from sensorfit.cli.manifest import run_recorded
from sensorfit.cli.options import DerivativeOptions
from sensorfit.cli.utils import absolute, echo_outputs, error_boundary
from sensorfit.config import CSV_DERIVATIVE_COLUMN, CSV_TIME_COLUMN, DERIVATIVE_FILE_NAME
from sensorfit.series.csvio import read_series_csv, write_columns_csv
from sensorfit.series.derivative import finite_diff_derivative


def run_derivative(options: DerivativeOptions) -> list[Path]:
    derivative = finite_diff_derivative(read_series_csv(Path(options.input)))
    path = write_columns_csv(
        Path(options.out_dir) / DERIVATIVE_FILE_NAME,
        {CSV_TIME_COLUMN: derivative.times, CSV_DERIVATIVE_COLUMN: derivative.rates},
    )
    return [path]


def derivative_command(
    input_csv: Path = typer.Argument(..., help="Time,Message CSV"),
    out_dir: Path = typer.Option(Path("out"), "--out-dir", "-o", help="Directory for derivative.csv"),
) -> None:
    """Write the backward-difference derivative of a series as Time,Derivative."""
    with error_boundary():
        options = DerivativeOptions(out_dir=absolute(out_dir), input=absolute(input_csv))
        outputs, manifest = run_recorded(
            "derivative", options, options.inputs(), Path(options.out_dir), run_derivative,
        )
        echo_outputs(outputs, manifest)
