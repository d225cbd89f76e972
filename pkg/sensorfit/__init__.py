"""Noisy sensor time-series interpolation with overfit dense networks and classical fits."""

from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version("sensorfit")
except PackageNotFoundError:
    # Fallback for development mode
    __version__ = "0.0.0-dev"
