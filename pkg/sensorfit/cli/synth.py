"""CLI command for writing a synthetic benchmark series."""

from pathlib import Path

import typer

from sensorfit.bench import generate, resolve_spec, save_spec_file
from sensorfit.cli.manifest import run_recorded
from sensorfit.cli.options import SynthOptions
from sensorfit.cli.utils import absolute, echo_outputs, error_boundary
from sensorfit.config import DEFAULT_SYNTHETIC_PRESET
from sensorfit.series.csvio import write_series_csv

NOISY_FILE_NAME = "noisy.csv"
CLEAN_FILE_NAME = "clean.csv"
SPEC_FILE_NAME = "spec.yaml"


def run_synth(options: SynthOptions) -> list[Path]:
    out_dir = Path(options.out_dir)
    spec = resolve_spec(options.synthetic)
    noisy, clean = generate(spec)
    return [
        write_series_csv(out_dir / NOISY_FILE_NAME, noisy.times, noisy.values),
        write_series_csv(out_dir / CLEAN_FILE_NAME, clean.times, clean.values),
        save_spec_file(spec, out_dir / SPEC_FILE_NAME),
    ]


def synth_command(
    synthetic: str = typer.Option(
        DEFAULT_SYNTHETIC_PRESET,
        "--synthetic",
        "-s",
        help="Preset name (default, clean, ramp, piecewise) or a YAML spec file",
    ),
    out_dir: Path = typer.Option(Path("out"), "--out-dir", "-o", help="Directory for noisy.csv and clean.csv"),
) -> None:
    """Write the noisy and clean series of a synthetic signal.

    spec.yaml holds the fully expanded spec, so it can be edited and passed
    back with --synthetic.
    """
    with error_boundary():
        if Path(synthetic).is_file():
            synthetic = absolute(synthetic)
        options = SynthOptions(out_dir=absolute(out_dir), synthetic=synthetic)
        outputs, manifest = run_recorded("synth", options, options.inputs(), Path(options.out_dir), run_synth)
        echo_outputs(outputs, manifest)
