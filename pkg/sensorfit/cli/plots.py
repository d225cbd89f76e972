"""Standalone SVG figures.

SVGs are written with a fixed hash salt and no date metadata so the same
data produces the same file.
"""

from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from sensorfit.config import CSV_TIME_COLUMN, CSV_VALUE_COLUMN  # noqa: E402
from sensorfit.series.models import ArrayLike, DerivativeSeries, TimeSeries  # noqa: E402

_SVG_SALT = "sensorfit"


def _save(fig, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with matplotlib.rc_context({"svg.hashsalt": _SVG_SALT}):
        fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return path


def plot_interpolation(
    grid_times: ArrayLike,
    grid_values: ArrayLike,
    original: TimeSeries,
    path: Path,
) -> Path:
    """Dense-grid prediction as a line over the original samples."""
    fig, ax = plt.subplots(figsize=(10, 5))
    ax.scatter(original.times, original.values, s=6, color="tab:orange", label="Original Data")
    ax.plot(grid_times, grid_values, linewidth=1.2, color="tab:blue", label="Interpolated Data")
    ax.set_xlabel(CSV_TIME_COLUMN)
    ax.set_ylabel(CSV_VALUE_COLUMN)
    ax.legend()
    fig.tight_layout()
    return _save(fig, path)


def plot_derivatives(
    original: DerivativeSeries,
    interpolated: Optional[DerivativeSeries],
    path: Path,
    label: str = "Interpolated Data",
) -> Path:
    """Finite-difference derivative of the samples vs. that of an interpolant."""
    fig, ax = plt.subplots(figsize=(10, 5))
    ax.scatter(original.times, original.rates, s=6, color="tab:orange", label="Derivative on Original Data")
    if interpolated is not None:
        ax.scatter(
            interpolated.times, interpolated.rates, s=2, color="tab:blue",
            label=f"Derivative on {label}",
        )
    ax.set_xlabel(CSV_TIME_COLUMN)
    ax.set_ylabel(CSV_VALUE_COLUMN)
    ax.legend()
    fig.tight_layout()
    return _save(fig, path)
