"""CLI entry point for sensorfit.

This module provides the main CLI application that combines all commands
and subcommands into a single unified interface.
"""

import typer

from sensorfit.cli.compare import compare_command
from sensorfit.cli.config import config_app
from sensorfit.cli.derivative import derivative_command
from sensorfit.cli.main import main_command
from sensorfit.cli.predict import predict_command
from sensorfit.cli.rerun import rerun_command
from sensorfit.cli.summary import summary_command
from sensorfit.cli.synth import synth_command
from sensorfit.cli.train import train_command

# Main application
app = typer.Typer(
    name="sensorfit",
    help="sensorfit: neural interpolation and denoising of sensor time series",
    add_completion=False,
)

# Add subcommand groups
app.add_typer(config_app, name="config")

# Add individual commands
app.command("train")(train_command)
app.command("predict")(predict_command)
app.command("derivative")(derivative_command)
app.command("compare")(compare_command)
app.command("synth")(synth_command)
app.command("summary")(summary_command)
app.command("rerun")(rerun_command)

# Root callback: --version and --verbose
app.callback(invoke_without_command=True)(main_command)


__all__ = [
    "app",
    "config_app",
    "main_command",
    "train_command",
    "predict_command",
    "derivative_command",
    "compare_command",
    "synth_command",
    "summary_command",
    "rerun_command",
]
