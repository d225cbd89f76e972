"""Classical interpolation exception classes.

Contains:
- InterpolationError: Base exception for classical fitting errors
- TooManyPointsError: Polynomial fit requested above the point cap
- SingularSystemError: Vandermonde elimination hit a pivot below tolerance
- OutOfRangeError: Spline evaluated outside its knot range
"""

from sensorfit.exceptions import SensorFitError


class InterpolationError(SensorFitError):
    """Base exception for classical interpolation errors."""

    pass


class TooManyPointsError(InterpolationError):
    """Raised when a polynomial fit gets more points than the cap allows."""

    def __init__(self, got: int, cap: int):
        self.got = got
        self.cap = cap
        super().__init__(f"polynomial interpolation is capped at {cap} points, got {got}")


class SingularSystemError(InterpolationError):
    """Raised when the Vandermonde system is numerically singular."""

    def __init__(self, pivot: float, tolerance: float):
        self.pivot = pivot
        self.tolerance = tolerance
        super().__init__(f"Vandermonde pivot {pivot:.3e} is below tolerance {tolerance:.1e}")


class OutOfRangeError(InterpolationError):
    """Raised when a spline is evaluated outside [first knot, last knot]."""

    def __init__(self, x: float, low: float, high: float):
        self.x = x
        self.low = low
        self.high = high
        super().__init__(f"x={x!r} is outside the spline range [{low!r}, {high!r}]")
