"""Exception classes shared across sensorfit packages.

Contains:
- SensorFitError: Root of every error raised by sensorfit
- LengthMismatchError: Two paired sequences differ in length
- EmptyInputError: A sequence that must be non-empty is empty
- TooFewPointsError: An operation needs more samples than it was given
"""

from typing import Optional


class SensorFitError(Exception):
    """Base exception for all sensorfit errors."""

    pass


class LengthMismatchError(SensorFitError):
    """Raised when paired sequences have different lengths."""

    def __init__(self, left: int, right: int, what: str = "sequences"):
        self.left = left
        self.right = right
        super().__init__(f"{what} have different lengths: {left} != {right}")


class EmptyInputError(SensorFitError):
    """Raised when an input sequence is empty."""

    pass


class TooFewPointsError(SensorFitError):
    """Raised when an operation receives fewer samples than it needs."""

    def __init__(self, required: int, got: int, operation: Optional[str] = None):
        self.required = required
        self.got = got
        prefix = f"{operation}: " if operation else ""
        super().__init__(f"{prefix}needs at least {required} points, got {got}")
