"""CLI command for describing a model file."""

from pathlib import Path

import typer

from sensorfit.cli.utils import error_boundary
from sensorfit.model_io import ModelKind, encode, load_file
from sensorfit.nn.summary import format_summary, summarize


def summary_command(
    model: Path = typer.Argument(..., help="Model file to describe"),
) -> None:
    """Print the layer table of a network, or the size of a classical model."""
    with error_boundary():
        loaded = load_file(model)

        if loaded.kind is ModelKind.MLP:
            typer.echo(format_summary(summarize(loaded.model)))
        else:
            record = encode(loaded.model)
            typer.echo(f"Kind: {loaded.kind.value}")
            typer.echo(f"Total params: {record.parameter_count:,}")

        if loaded.provenance is not None:
            prov = loaded.provenance
            typer.echo(f"Method: {prov.method or '-'}  Seed: {prov.seed}  Epochs: {prov.epochs}")
            if prov.final_loss is not None:
                typer.echo(f"Final loss: {prov.final_loss:.6g}")
