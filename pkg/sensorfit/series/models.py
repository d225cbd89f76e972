"""Data models for sensorfit series module.

Contains:
- TimeSeries: Validated (time, value) record with unit labels
- NormalizationParams: Min/max constants of a min-max normalization
- DerivativeSeries: Backward difference quotients of a TimeSeries
"""

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from sensorfit.exceptions import EmptyInputError, LengthMismatchError
from sensorfit.series.exceptions import (
    DegenerateSpanError,
    NonFiniteError,
    NonIncreasingTimeError,
)

ArrayLike = Union[Sequence[float], np.ndarray]


def _frozen_array(data: ArrayLike) -> np.ndarray:
    """Copy data into a read-only 1-D float64 array."""
    array = np.array(data, dtype=np.float64).reshape(-1)
    array.setflags(write=False)
    return array


def _first_non_finite(array: np.ndarray) -> int:
    """Index of the first non-finite entry, or -1."""
    bad = np.flatnonzero(~np.isfinite(array))
    return int(bad[0]) if bad.size else -1


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Ordered (time, value) samples.

    Invariants, enforced at construction: equal nonzero lengths, all entries
    finite, times strictly increasing.
    """

    times: np.ndarray
    values: np.ndarray
    time_unit: str = "s"
    value_unit: str = ""

    def __post_init__(self) -> None:
        times = _frozen_array(self.times)
        values = _frozen_array(self.values)

        if times.size != values.size:
            raise LengthMismatchError(times.size, values.size, "times and values")
        if times.size == 0:
            raise EmptyInputError("a time series needs at least one sample")

        bad_t = _first_non_finite(times)
        bad_v = _first_non_finite(values)
        if bad_t >= 0 and (bad_v < 0 or bad_t <= bad_v):
            raise NonFiniteError(bad_t, axis="times")
        if bad_v >= 0:
            raise NonFiniteError(bad_v, axis="values")

        steps = np.flatnonzero(np.diff(times) <= 0)
        if steps.size:
            raise NonIncreasingTimeError(int(steps[0]) + 1)

        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.times.size)


@dataclass(frozen=True)
class NormalizationParams:
    """Constants of a min-max normalization of both axes.

    Attributes:
        t_start: Time mapped to 0.
        t_end: Time mapped to 1.
        v_min: Value mapped to 0.
        v_max: Value mapped to 1.
    """

    t_start: float
    t_end: float
    v_min: float
    v_max: float

    def __post_init__(self) -> None:
        for name in ("t_start", "t_end", "v_min", "v_max"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DegenerateSpanError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if not self.t_end > self.t_start:
            raise DegenerateSpanError(
                f"time span is empty: t_start={self.t_start}, t_end={self.t_end}"
            )
        if not self.v_max > self.v_min:
            raise DegenerateSpanError(
                f"value span is empty: v_min={self.v_min}, v_max={self.v_max}"
            )

    @classmethod
    def identity(cls) -> "NormalizationParams":
        """Params for data that is already on [0, 1] on both axes."""
        return cls(t_start=0.0, t_end=1.0, v_min=0.0, v_max=1.0)

    @property
    def time_span(self) -> float:
        return self.t_end - self.t_start

    @property
    def value_span(self) -> float:
        return self.v_max - self.v_min


@dataclass(frozen=True, eq=False)
class DerivativeSeries:
    """Finite-difference rates aligned to times[1:] of the source series.

    The first source sample has no backward neighbour and is omitted.
    """

    times: np.ndarray
    rates: np.ndarray
    time_unit: str = "s"
    rate_unit: str = ""

    def __post_init__(self) -> None:
        times = _frozen_array(self.times)
        rates = _frozen_array(self.rates)
        if times.size != rates.size:
            raise LengthMismatchError(times.size, rates.size, "times and rates")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "rates", rates)

    def __len__(self) -> int:
        return int(self.times.size)
