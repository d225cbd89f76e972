"""Shared utility functions for CLI commands."""

import json
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional, Union

import typer
from pydantic import ValidationError

from sensorfit.config import DEFAULT_MINI_BATCH_SIZE, Method
from sensorfit.exceptions import SensorFitError

LOGGER_NAME = "sensorfit"
_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def configure_logging(verbosity: int) -> None:
    """Install one stderr handler on the sensorfit logger.

    Args:
        verbosity: 0 for warnings only, 1 for INFO, 2 or more for DEBUG.
    """
    logger = logging.getLogger(LOGGER_NAME)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(_LEVELS.get(verbosity, logging.DEBUG))
    logger.propagate = False


def error_line(error: BaseException) -> str:
    """One machine-readable JSON line describing an error."""
    message = str(error)
    if isinstance(error, ValidationError):
        message = "; ".join(
            f"{'.'.join(str(p) for p in e['loc']) or 'value'}: {e['msg']}" for e in error.errors()
        )
    return json.dumps({"error": type(error).__name__, "message": message}, sort_keys=True)


@contextmanager
def error_boundary() -> Iterator[None]:
    """Turn library errors into a JSON line on stderr and exit code 1."""
    try:
        yield
    except (SensorFitError, ValidationError, OSError) as e:
        typer.echo(error_line(e), err=True)
        raise typer.Exit(1)


def parse_batch(value: str) -> Optional[int]:
    """'full' -> None (full batch), 'mini' -> the default mini-batch size, else a positive int."""
    text = str(value).strip().lower()
    if text == "full":
        return None
    if text == "mini":
        return DEFAULT_MINI_BATCH_SIZE
    try:
        size = int(text)
    except ValueError:
        raise ValueError(f"batch must be 'full', 'mini' or a positive integer, got {value!r}")
    if size < 1:
        raise ValueError(f"batch size must be >= 1, got {size}")
    return size


def parse_methods(value: str) -> list[Method]:
    """Comma-separated method names, e.g. 'neural,spline'."""
    names = [name.strip().lower() for name in value.split(",") if name.strip()]
    methods = []
    for name in names:
        try:
            methods.append(Method(name))
        except ValueError:
            valid = ", ".join(m.value for m in Method)
            raise ValueError(f"unknown method {name!r}; valid methods: {valid}")
    return sorted(set(methods), key=lambda m: m.value)


def absolute(path: Union[str, Path]) -> str:
    """Absolute form of a path, as recorded in manifests."""
    return str(Path(path).expanduser().resolve())


def echo_outputs(outputs: list[Path], manifest: Optional[Path] = None) -> None:
    for path in outputs:
        typer.echo(f"wrote {path}")
    if manifest is not None:
        typer.echo(f"wrote {manifest}")
