"""Construction gatekeeper for TimeSeries."""

from sensorfit.series.models import ArrayLike, TimeSeries


def validate_series(
    times: ArrayLike,
    values: ArrayLike,
    time_unit: str = "s",
    value_unit: str = "",
) -> TimeSeries:
    """Build a TimeSeries, enforcing every series invariant.

    Args:
        times: Timestamps, strictly increasing.
        values: Measurements, one per timestamp.
        time_unit: Free-form label for the time axis.
        value_unit: Free-form label for the value axis.

    Returns:
        A validated, immutable TimeSeries.

    Raises:
        LengthMismatchError: If the sequences differ in length.
        EmptyInputError: If both sequences are empty.
        NonFiniteError: On the first NaN/infinite entry.
        NonIncreasingTimeError: On the first repeated or decreasing timestamp.
    """
    return TimeSeries(times, values, time_unit=time_unit, value_unit=value_unit)
