"""Error metrics between paired sequences."""

import math

import numpy as np

from sensorfit.exceptions import EmptyInputError, LengthMismatchError
from sensorfit.series.exceptions import NonFiniteError
from sensorfit.series.models import ArrayLike


def rmse(a: ArrayLike, b: ArrayLike) -> float:
    """Root mean squared difference sqrt(mean((a - b)^2)).

    Raises:
        LengthMismatchError: If a and b differ in length.
        EmptyInputError: If both are empty.
        NonFiniteError: If either contains NaN or infinity.
    """
    a = np.asarray(a, dtype=np.float64).reshape(-1)
    b = np.asarray(b, dtype=np.float64).reshape(-1)
    if a.size != b.size:
        raise LengthMismatchError(a.size, b.size)
    if a.size == 0:
        raise EmptyInputError("rmse of empty sequences")
    for axis, array in (("a", a), ("b", b)):
        bad = np.flatnonzero(~np.isfinite(array))
        if bad.size:
            raise NonFiniteError(int(bad[0]), axis=axis)

    diff = a - b
    return math.sqrt(float(np.mean(diff * diff)))
