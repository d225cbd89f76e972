"""Synthetic spec presets and YAML spec files.

A spec file is a YAML mapping of SyntheticSpec fields; omitted fields take
their defaults:

    function: ramp-plus-sine
    amplitudes: [0.3, 0.1]
    frequencies: [1, 3]
    slope: 0.4
    n_samples: 400
    sigma: 0.05
    seed: 42
"""

from pathlib import Path
from typing import Union

import yaml

from sensorfit.bench.exceptions import InvalidSpecError
from sensorfit.bench.models import SyntheticSpec
from sensorfit.bench.signals import parse_spec
from sensorfit.config import SignalKind

# Named presets; "default" is the acceptance benchmark.
PRESETS: dict[str, SyntheticSpec] = {
    "default": SyntheticSpec(),
    "clean": SyntheticSpec(sigma=0.0),
    "ramp": SyntheticSpec(function=SignalKind.RAMP_PLUS_SINE),
    "piecewise": SyntheticSpec(function=SignalKind.PIECEWISE_SMOOTH),
}


def load_spec_file(path: Union[str, Path]) -> SyntheticSpec:
    """Read a YAML spec file.

    Raises:
        InvalidSpecError: If the file cannot be read, is not a mapping, or fails validation.
    """
    path = Path(path)
    try:
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        raise InvalidSpecError(f"Failed to load synthetic spec from {path}: {e}")

    if not isinstance(data, dict):
        raise InvalidSpecError(f"{path}: a synthetic spec must be a mapping, got {type(data).__name__}")
    return parse_spec(data)


def save_spec_file(spec: SyntheticSpec, path: Union[str, Path]) -> Path:
    """Write a spec as YAML that load_spec_file reads back to the same spec."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = spec.model_dump(mode="json")
    with open(path, "w") as f:
        yaml.dump(data, f, default_flow_style=False, sort_keys=False)
    return path


def resolve_spec(name_or_path: str) -> SyntheticSpec:
    """Look up a preset by name, falling back to a YAML file path.

    Raises:
        InvalidSpecError: If it is neither a preset nor a readable spec file.
    """
    if name_or_path in PRESETS:
        return PRESETS[name_or_path]
    if Path(name_or_path).is_file():
        return load_spec_file(name_or_path)
    raise InvalidSpecError(
        f"unknown synthetic spec {name_or_path!r}; use a spec file or one of: {', '.join(sorted(PRESETS))}"
    )
