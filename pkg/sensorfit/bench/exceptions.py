"""Benchmark exception classes.

Contains:
- BenchError: Base exception for synthetic data and comparison errors
- InvalidSpecError: A synthetic signal spec is malformed or unknown
"""

from sensorfit.exceptions import SensorFitError


class BenchError(SensorFitError):
    """Base exception for benchmark errors."""

    pass


class InvalidSpecError(BenchError):
    """Raised when a synthetic spec fails validation or cannot be found."""

    pass
