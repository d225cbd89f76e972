"""Data models for sensorfit bench module.

Contains:
- SyntheticSpec: Parameters of a seeded synthetic signal
- MethodRow: Metrics of one interpolation method in a comparison
- ComparisonReport: All method rows plus the clean-signal reference
"""

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from sensorfit.config import Method, SignalKind
from sensorfit.series.models import DerivativeSeries


class SyntheticSpec(BaseModel):
    """Closed-form clean signal plus Gaussian noise.

    With phase u = (t - t_start) / (t_end - t_start) in [0, 1]:

    - sum-of-sines: offset + sum_k a_k sin(2 pi f_k u)
    - ramp-plus-sine: the above plus slope * (u - 0.5)
    - piecewise-smooth: the sum of sines plus a jump of height step at u = breakpoint

    Attributes:
        function: Which clean signal to sample.
        offset: Constant level.
        amplitudes: Sine amplitudes a_k.
        frequencies: Sine frequencies f_k, in cycles per span.
        slope: Ramp rise over the whole span (ramp-plus-sine only).
        step: Jump height (piecewise-smooth only).
        breakpoint: Phase of the jump, in (0, 1).
        n_samples: Number of uniformly spaced samples.
        t_start: First sample time.
        t_end: Last sample time.
        sigma: Standard deviation of the additive noise.
        seed: Seed of the noise generator.
    """

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    function: SignalKind = SignalKind.SUM_OF_SINES
    offset: float = 0.5
    amplitudes: tuple[float, ...] = (0.3, 0.1)
    frequencies: tuple[float, ...] = (1.0, 3.0)
    slope: float = 0.4
    step: float = 0.3
    breakpoint: float = Field(default=0.5, gt=0.0, lt=1.0)
    n_samples: int = Field(default=400, ge=4)
    t_start: float = 0.0
    t_end: float = 1.0
    sigma: float = Field(default=0.05, ge=0.0)
    seed: int = Field(default=42, ge=0)

    @model_validator(mode="after")
    def check_shape(self) -> "SyntheticSpec":
        if not self.t_end > self.t_start:
            raise ValueError(f"t_end ({self.t_end}) must be greater than t_start ({self.t_start})")
        if len(self.amplitudes) != len(self.frequencies):
            raise ValueError(
                f"{len(self.amplitudes)} amplitudes but {len(self.frequencies)} frequencies"
            )
        return self

    @property
    def span(self) -> float:
        return self.t_end - self.t_start


class MethodRow(BaseModel):
    """Metrics of one method, or the error that stopped it.

    Attributes:
        method: Interpolation method.
        rmse_to_clean: RMSE of the method's values at the sample times vs. the clean signal.
        noisy_rmse_to_clean: RMSE of the raw noisy samples vs. the clean signal.
        original_derivative_std: Std of the finite-difference derivative of the noisy samples.
        interpolated_derivative_std: Std of the finite-difference derivative on the dense grid.
        wall_time: Seconds spent on this method.
        error: Error text when the method failed; metrics are then None.
    """

    method: Method
    rmse_to_clean: Optional[float] = None
    noisy_rmse_to_clean: Optional[float] = None
    original_derivative_std: Optional[float] = None
    interpolated_derivative_std: Optional[float] = None
    wall_time: float = 0.0
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


class ComparisonReport(BaseModel):
    """Rows for every requested method, sorted by method name.

    Attributes:
        rows: One row per method.
        grid_points: Size of the dense grid.
        n_samples: Number of noisy samples.
        clean_derivative_std: Std of the clean signal's exact derivative at the
            sample times, when known.
        derivatives: Finite-difference derivative of the noisy samples under
            key "original", and each successful method's dense-grid
            derivative under its method name. Not serialized.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    rows: list[MethodRow] = []
    grid_points: int
    n_samples: int
    clean_derivative_std: Optional[float] = None
    derivatives: dict[str, Any] = Field(default_factory=dict, exclude=True)

    def row(self, method: Method) -> MethodRow:
        """The row of a method.

        Raises:
            KeyError: If the method was not part of the comparison.
        """
        for row in self.rows:
            if row.method == method:
                return row
        raise KeyError(method.value)

    def derivative(self, key: str) -> DerivativeSeries:
        return self.derivatives[key]
