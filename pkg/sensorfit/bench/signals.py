"""Seeded synthetic signals with a known clean truth.

Noise is drawn from numpy's PCG64 bit generator,
numpy.random.default_rng(seed).normal(0, sigma, n_samples), so a given
seed yields the same stream on every platform numpy supports.
"""

import logging
from typing import Any, Mapping, Union

import numpy as np
from pydantic import ValidationError

from sensorfit.bench.exceptions import InvalidSpecError
from sensorfit.bench.models import SyntheticSpec
from sensorfit.config import SignalKind
from sensorfit.series.models import ArrayLike, TimeSeries

logger = logging.getLogger(__name__)

SpecLike = Union[SyntheticSpec, Mapping[str, Any]]


def parse_spec(data: SpecLike) -> SyntheticSpec:
    """Validate a mapping into a SyntheticSpec.

    Raises:
        InvalidSpecError: If any field is missing, unknown or out of range.
    """
    if isinstance(data, SyntheticSpec):
        return data
    try:
        return SyntheticSpec.model_validate(dict(data))
    except (ValidationError, TypeError, ValueError) as e:
        raise InvalidSpecError(f"invalid synthetic spec: {e}") from e


def _phase(spec: SyntheticSpec, times: ArrayLike) -> np.ndarray:
    return (np.asarray(times, dtype=np.float64) - spec.t_start) / spec.span


def clean_values(spec: SyntheticSpec, times: ArrayLike) -> np.ndarray:
    """Evaluate the clean signal at arbitrary times."""
    u = _phase(spec, times)
    values = np.full_like(u, spec.offset)
    for amplitude, frequency in zip(spec.amplitudes, spec.frequencies):
        values += amplitude * np.sin(2.0 * np.pi * frequency * u)

    if spec.function is SignalKind.RAMP_PLUS_SINE:
        values += spec.slope * (u - 0.5)
    elif spec.function is SignalKind.PIECEWISE_SMOOTH:
        values += np.where(u >= spec.breakpoint, spec.step, 0.0)
    return values


def clean_derivative(spec: SyntheticSpec, times: ArrayLike) -> np.ndarray:
    """Exact d(value)/d(time) of the clean signal.

    The piecewise-smooth jump contributes nothing; its derivative is taken
    from the smooth pieces on either side.
    """
    u = _phase(spec, times)
    rates = np.zeros_like(u)
    for amplitude, frequency in zip(spec.amplitudes, spec.frequencies):
        omega = 2.0 * np.pi * frequency
        rates += amplitude * omega * np.cos(omega * u)

    if spec.function is SignalKind.RAMP_PLUS_SINE:
        rates += spec.slope
    return rates / spec.span


def generate(spec: SpecLike) -> tuple[TimeSeries, TimeSeries]:
    """Sample the clean signal on a uniform grid and add seeded Gaussian noise.

    Args:
        spec: A SyntheticSpec or a mapping of its fields.

    Returns:
        Tuple of (noisy, clean) series sharing the same times.

    Raises:
        InvalidSpecError: If spec does not validate.
    """
    spec = parse_spec(spec)
    times = np.linspace(spec.t_start, spec.t_end, spec.n_samples)
    clean = clean_values(spec, times)

    if spec.sigma > 0.0:
        noise = np.random.default_rng(spec.seed).normal(0.0, spec.sigma, spec.n_samples)
    else:
        noise = np.zeros(spec.n_samples)

    logger.debug(
        "generated %s: n=%d sigma=%g seed=%d",
        spec.function.value, spec.n_samples, spec.sigma, spec.seed,
    )
    return TimeSeries(times, clean + noise), TimeSeries(times, clean)
