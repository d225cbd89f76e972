"""Root callback: version flag and log verbosity."""

from typing import Optional

import typer

from sensorfit import __version__
from sensorfit.cli.utils import configure_logging


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        typer.echo(f"sensorfit {__version__}")
        raise typer.Exit()


def main_command(
    ctx: typer.Context,
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        "-V",
        help="Show version and exit",
        callback=version_callback,
        is_eager=True,
    ),
    verbose: int = typer.Option(
        0,
        "--verbose",
        "-v",
        count=True,
        help="Log progress to stderr (-v for INFO, -vv for DEBUG)",
    ),
) -> None:
    """Overfit a neural network to sensor samples to interpolate and denoise them."""
    configure_logging(verbose)
    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())
