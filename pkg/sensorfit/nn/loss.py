"""Mean squared error loss."""

import numpy as np

from sensorfit.exceptions import EmptyInputError, LengthMismatchError
from sensorfit.series.models import ArrayLike


def mse_loss(predictions: ArrayLike, targets: ArrayLike) -> tuple[float, np.ndarray]:
    """Mean squared error and its gradient with respect to the predictions.

    Args:
        predictions: Model outputs, any shape.
        targets: Same number of elements as predictions.

    Returns:
        Tuple of (loss, gradient shaped like predictions).

    Raises:
        EmptyInputError: If there are no predictions.
        LengthMismatchError: If the element counts differ.
    """
    p = np.asarray(predictions, dtype=np.float64)
    y = np.asarray(targets, dtype=np.float64)
    if p.size != y.size:
        raise LengthMismatchError(p.size, y.size, "predictions and targets")
    if p.size == 0:
        raise EmptyInputError("mse_loss of an empty batch")

    diff = p - y.reshape(p.shape)
    loss = float(np.mean(diff * diff))
    return loss, (2.0 / p.size) * diff
