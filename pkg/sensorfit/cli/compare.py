"""CLI command for comparing interpolation methods on a series."""

import logging
from pathlib import Path
from typing import Optional

import typer

from sensorfit import global_config
from sensorfit.bench import (
    ORIGINAL_KEY,
    ComparisonReport,
    clean_derivative,
    format_report,
    generate,
    resolve_spec,
    run_comparison,
    write_derivatives_csv,
    write_report_csv,
    write_report_text,
)
from sensorfit.cli.manifest import run_recorded
from sensorfit.cli.options import CompareOptions, resolve_training
from sensorfit.cli.plots import plot_derivatives
from sensorfit.cli.utils import absolute, echo_outputs, error_boundary, error_line, parse_methods
from sensorfit.config import (
    DEFAULT_SYNTHETIC_PRESET,
    DERIVATIVE_PLOT_NAME,
    REPORT_CSV_NAME,
    REPORT_DERIVATIVES_NAME,
    REPORT_TEXT_NAME,
    Method,
)
from sensorfit.series.csvio import read_series_csv

logger = logging.getLogger(__name__)


def _plotted_key(report: ComparisonReport) -> Optional[str]:
    """Neural if it succeeded, else the first successful method."""
    succeeded = [row.method for row in report.rows if row.ok]
    if Method.NEURAL in succeeded:
        return Method.NEURAL.value
    return succeeded[0].value if succeeded else None


def build_report(options: CompareOptions) -> ComparisonReport:
    if options.input is not None:
        noisy, clean, clean_rates = read_series_csv(Path(options.input)), None, None
    else:
        spec = resolve_spec(options.synthetic)
        noisy, clean = generate(spec)
        clean_rates = clean_derivative(spec, clean.times)

    return run_comparison(
        noisy,
        clean,
        options.methods,
        grid_points=options.points,
        train_config=options.train_config(),
        layers=options.layers(),
        seed=options.seed,
        clean_rates=clean_rates,
        workers=options.workers,
    )


def run_compare(options: CompareOptions) -> list[Path]:
    """Run the comparison and write its report, derivative curves and figure.

    Returns:
        Paths of the files written.
    """
    out_dir = Path(options.out_dir)
    report = build_report(options)

    key = _plotted_key(report)
    interpolated = report.derivative(key) if key is not None else None
    label = f"Interpolated Data ({key})" if key is not None else "Interpolated Data"

    outputs = [
        write_report_csv(report, out_dir / REPORT_CSV_NAME),
        write_report_text(report, out_dir / REPORT_TEXT_NAME),
        write_derivatives_csv(report, out_dir / REPORT_DERIVATIVES_NAME),
        plot_derivatives(report.derivative(ORIGINAL_KEY), interpolated, out_dir / DERIVATIVE_PLOT_NAME, label),
    ]
    typer.echo(format_report(report), nl=False)
    return outputs


def compare_command(
    input_csv: Optional[Path] = typer.Argument(None, help="Time,Message CSV (omit to use --synthetic)"),
    synthetic: Optional[str] = typer.Option(
        None,
        "--synthetic",
        "-s",
        help="Preset name (default, clean, ramp, piecewise) or a YAML spec file",
    ),
    methods: Optional[str] = typer.Option(
        None,
        "--methods",
        "-m",
        help="Comma-separated methods (default: linear,neural,polynomial,spline)",
    ),
    out_dir: Path = typer.Option(Path("out"), "--out-dir", "-o", help="Directory for the report files"),
    points: Optional[int] = typer.Option(None, "--points", help="Dense grid size (default 10000)"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Threads for running methods"),
    epochs: Optional[int] = typer.Option(None, "--epochs", help="Training epochs (default 1000)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Initialization and shuffle seed (default 0)"),
    batch: Optional[str] = typer.Option(None, "--batch", help="'full', 'mini' or a batch size"),
    learning_rate: Optional[float] = typer.Option(None, "--lr", help="Adam learning rate (default 1e-3)"),
    architecture: Optional[str] = typer.Option(None, "--architecture", help="Neural layer list"),
) -> None:
    """Compare neural, linear, polynomial and spline interpolation."""
    with error_boundary():
        if input_csv is None and synthetic is None:
            synthetic = DEFAULT_SYNTHETIC_PRESET
        if synthetic is not None and Path(synthetic).is_file():
            synthetic = absolute(synthetic)

        fields = {}
        if methods is not None:
            try:
                fields["methods"] = parse_methods(methods)
            except ValueError as e:
                typer.echo(error_line(e), err=True)
                raise typer.Exit(1)

        options = CompareOptions(
            out_dir=absolute(out_dir),
            input=absolute(input_csv) if input_csv is not None else None,
            synthetic=synthetic,
            points=global_config.get_value("predict.points", points),
            workers=workers,
            **fields,
            **resolve_training(epochs, seed, batch, learning_rate, architecture),
        )
        outputs, manifest = run_recorded("compare", options, options.inputs(), Path(options.out_dir), run_compare)
        echo_outputs(outputs, manifest)
