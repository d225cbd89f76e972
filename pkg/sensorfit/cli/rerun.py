"""CLI command for replaying a run manifest."""

from pathlib import Path
from typing import Any, Callable, Optional

import typer
from pydantic import BaseModel

from sensorfit.cli.compare import run_compare
from sensorfit.cli.derivative import run_derivative
from sensorfit.cli.manifest import read_manifest, run_recorded
from sensorfit.cli.options import (
    CompareOptions,
    DerivativeOptions,
    PredictOptions,
    SynthOptions,
    TrainOptions,
)
from sensorfit.cli.predict import run_predict
from sensorfit.cli.synth import run_synth
from sensorfit.cli.train import run_train
from sensorfit.cli.utils import absolute, echo_outputs, error_boundary, error_line

# subcommand -> (options type, runner)
RUNNERS: dict[str, tuple[type[BaseModel], Callable[[Any], list[Path]]]] = {
    "train": (TrainOptions, run_train),
    "predict": (PredictOptions, run_predict),
    "derivative": (DerivativeOptions, run_derivative),
    "compare": (CompareOptions, run_compare),
    "synth": (SynthOptions, run_synth),
}


def rerun_command(
    manifest_file: Path = typer.Argument(..., help="manifest.<subcommand>.json of an earlier run"),
    out_dir: Optional[Path] = typer.Option(
        None,
        "--out-dir",
        "-o",
        help="Write to this directory instead of the recorded one",
    ),
) -> None:
    """Re-execute a recorded run with its recorded options."""
    with error_boundary():
        manifest = read_manifest(manifest_file)
        if manifest.subcommand not in RUNNERS:
            typer.echo(
                error_line(ValueError(f"manifest records unknown subcommand {manifest.subcommand!r}")),
                err=True,
            )
            raise typer.Exit(1)

        options_type, runner = RUNNERS[manifest.subcommand]
        recorded = dict(manifest.options)
        if out_dir is not None:
            recorded["out_dir"] = absolute(out_dir)
        options = options_type.model_validate(recorded)

        outputs, written = run_recorded(
            manifest.subcommand, options, options.inputs(), Path(options.out_dir), runner,
        )
        echo_outputs(outputs, written)
