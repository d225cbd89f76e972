"""Time-series data model for sensorfit.

This package provides:
- models: TimeSeries, NormalizationParams, DerivativeSeries
- validation: validate_series
- normalize: normalize, denormalize_times, denormalize_values and helpers
- grid: make_dense_grid, extrapolated_mask
- derivative: finite_diff_derivative
- metrics: rmse
- csvio: Time,Message CSV reading and writing
"""

from sensorfit.series.exceptions import (
    CsvFormatError,
    DegenerateSpanError,
    NonFiniteError,
    NonIncreasingTimeError,
    SeriesError,
)
from sensorfit.series.models import (
    DerivativeSeries,
    NormalizationParams,
    TimeSeries,
)
from sensorfit.series.validation import validate_series
from sensorfit.series.normalize import (
    denormalize_times,
    denormalize_values,
    normalize,
    normalize_times,
    normalize_values,
)
from sensorfit.series.grid import extrapolated_mask, make_dense_grid
from sensorfit.series.derivative import finite_diff_derivative
from sensorfit.series.metrics import rmse
from sensorfit.series.csvio import (
    read_series_csv,
    write_columns_csv,
    write_series_csv,
)


__all__ = [
    # Exceptions
    "SeriesError",
    "NonFiniteError",
    "NonIncreasingTimeError",
    "DegenerateSpanError",
    "CsvFormatError",
    # Models
    "TimeSeries",
    "NormalizationParams",
    "DerivativeSeries",
    # Operations
    "validate_series",
    "normalize",
    "normalize_times",
    "normalize_values",
    "denormalize_times",
    "denormalize_values",
    "make_dense_grid",
    "extrapolated_mask",
    "finite_diff_derivative",
    "rmse",
    # CSV
    "read_series_csv",
    "write_series_csv",
    "write_columns_csv",
]
