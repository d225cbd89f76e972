"""Time-series exception classes.

Contains all exception classes for series operations:
- SeriesError: Base exception for series-related errors
- NonFiniteError: A NaN or infinity was found at a given index
- NonIncreasingTimeError: Timestamps stop strictly increasing at a given index
- DegenerateSpanError: An axis has zero span and cannot be normalized
- CsvFormatError: A CSV file does not follow the Time,Message schema
"""

from typing import Optional

from sensorfit.exceptions import SensorFitError


class SeriesError(SensorFitError):
    """Base exception for series-related errors."""

    pass


class NonFiniteError(SeriesError):
    """Raised when a time or value entry is NaN or infinite."""

    def __init__(self, index: int, axis: str = "values"):
        self.index = index
        self.axis = axis
        super().__init__(f"non-finite entry in {axis} at index {index}")


class NonIncreasingTimeError(SeriesError):
    """Raised when times[index] <= times[index - 1]."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"times must be strictly increasing; violated at index {index}")


class DegenerateSpanError(SeriesError):
    """Raised when an axis has no spread (max == min)."""

    pass


class CsvFormatError(SeriesError):
    """Raised when a CSV file cannot be read as a Time,Message series.

    Attributes:
        rows: 1-based file line numbers of the offending rows (header is line 1).
    """

    def __init__(self, message: str, rows: Optional[list[int]] = None):
        self.rows = rows or []
        if self.rows:
            shown = ", ".join(str(r) for r in self.rows[:10])
            more = f" (+{len(self.rows) - 10} more)" if len(self.rows) > 10 else ""
            message = f"{message} at row(s) {shown}{more}"
        super().__init__(message)
