"""Run manifests: the resolved options and files of one subcommand run.

A manifest is written next to the outputs as manifest.<subcommand>.json;
'sensorfit rerun' replays it.
"""

from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable, Sequence

from pydantic import BaseModel

from sensorfit import __version__

MANIFEST_TEMPLATE = "manifest.{subcommand}.json"


class RunManifest(BaseModel):
    """Everything needed to reproduce a run.

    Attributes:
        subcommand: train, predict, derivative, compare or synth.
        version: sensorfit version that produced the run.
        inputs: Input files.
        outputs: Files written (the manifest itself excluded).
        options: Fully resolved options of the run.
        started_at: UTC start time, ISO 8601.
        finished_at: UTC finish time, ISO 8601.
    """

    subcommand: str
    version: str
    inputs: list[str]
    outputs: list[str]
    options: dict[str, Any]
    started_at: str
    finished_at: str


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def manifest_path(out_dir: Path, subcommand: str) -> Path:
    return Path(out_dir) / MANIFEST_TEMPLATE.format(subcommand=subcommand)


def write_manifest(manifest: RunManifest, out_dir: Path) -> Path:
    path = manifest_path(out_dir, manifest.subcommand)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(manifest.model_dump_json(indent=2) + "\n")
    return path


def read_manifest(path: Path) -> RunManifest:
    """Load a manifest file.

    Raises:
        OSError: If the file cannot be read.
        pydantic.ValidationError: If it is not a manifest.
    """
    return RunManifest.model_validate_json(Path(path).read_text())


def run_recorded(
    subcommand: str,
    options: BaseModel,
    inputs: Sequence[str],
    out_dir: Path,
    runner: Callable[[Any], list[Path]],
) -> tuple[list[Path], Path]:
    """Run a subcommand and write its manifest.

    Returns:
        Tuple of (output files, manifest path).
    """
    started = _now()
    outputs = runner(options)
    manifest = RunManifest(
        subcommand=subcommand,
        version=__version__,
        inputs=[str(p) for p in inputs],
        outputs=[str(p) for p in outputs],
        options=options.model_dump(mode="json"),
        started_at=started,
        finished_at=_now(),
    )
    return outputs, write_manifest(manifest, out_dir)
