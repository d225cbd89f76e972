"""Data models for sensorfit classical module.

Contains:
- LinearModel: Intercept and slope of a least-squares line
- PolynomialModel: Ascending-degree interpolation coefficients
- SplineModel: Natural cubic spline knots and per-segment coefficients
"""

import math
from dataclasses import dataclass

import numpy as np

from sensorfit.classical.exceptions import InterpolationError


def _finite_array(data, name: str, shape_hint: str) -> np.ndarray:
    array = np.array(data, dtype=np.float64)
    if array.size == 0:
        raise InterpolationError(f"{name} must not be empty ({shape_hint})")
    if not np.all(np.isfinite(array)):
        raise InterpolationError(f"{name} must be finite")
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class LinearModel:
    """Y = beta0 + beta1 * X."""

    beta0: float
    beta1: float

    def __post_init__(self) -> None:
        for name in ("beta0", "beta1"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InterpolationError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)


@dataclass(frozen=True, eq=False)
class PolynomialModel:
    """f(x) = a0 + a1 x + ... + a_{k-1} x^{k-1}, coefficients ascending."""

    coefficients: np.ndarray

    def __post_init__(self) -> None:
        coefficients = _finite_array(self.coefficients, "coefficients", "k >= 1").reshape(-1)
        object.__setattr__(self, "coefficients", coefficients)

    @property
    def degree(self) -> int:
        return int(self.coefficients.size) - 1


@dataclass(frozen=True, eq=False)
class SplineModel:
    """Natural cubic spline.

    Attributes:
        knot_times: Strictly increasing knot abscissae, n >= 3.
        knot_values: Value at each knot.
        coefficients: Shape (n - 1, 4); row i holds [c3, c2, c1, c0] of
            c3 s^3 + c2 s^2 + c1 s + c0 with s = x - knot_times[i].
        boundary: Boundary condition tag; always "natural".
    """

    knot_times: np.ndarray
    knot_values: np.ndarray
    coefficients: np.ndarray
    boundary: str = "natural"

    def __post_init__(self) -> None:
        times = _finite_array(self.knot_times, "knot_times", "n >= 3").reshape(-1)
        values = _finite_array(self.knot_values, "knot_values", "n >= 3").reshape(-1)
        coefficients = _finite_array(self.coefficients, "coefficients", "(n - 1, 4)")
        if values.size != times.size:
            raise InterpolationError("knot_times and knot_values differ in length")
        if np.any(np.diff(times) <= 0):
            raise InterpolationError("knot_times must be strictly increasing")
        if coefficients.shape != (times.size - 1, 4):
            raise InterpolationError(
                f"coefficients must have shape ({times.size - 1}, 4), got {coefficients.shape}"
            )
        if self.boundary != "natural":
            raise InterpolationError(f"unsupported boundary condition {self.boundary!r}")
        object.__setattr__(self, "knot_times", times)
        object.__setattr__(self, "knot_values", values)
        object.__setattr__(self, "coefficients", coefficients)

    @property
    def n_knots(self) -> int:
        return int(self.knot_times.size)
