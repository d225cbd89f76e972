"""Adam optimizer step.

    m <- b1 m + (1 - b1) g
    v <- b2 v + (1 - b2) g^2
    theta <- theta - lr (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps)
"""

from typing import Sequence

import numpy as np

from sensorfit.nn.exceptions import ShapeMismatchError
from sensorfit.nn.models import AdamState, TrainConfig


def adam_step(
    params: Sequence[np.ndarray],
    grads: Sequence[np.ndarray],
    state: AdamState,
    config: TrainConfig,
) -> tuple[list[np.ndarray], AdamState]:
    """Apply one bias-corrected Adam update.

    Inputs are not modified; new arrays are returned for the parameters and
    the state.

    Args:
        params: Parameter arrays.
        grads: Gradients, one per parameter with the same shape.
        state: Accumulators from the previous step.
        config: Supplies learning_rate, beta1, beta2 and epsilon.

    Returns:
        Tuple of (updated parameters, updated state with t + 1).

    Raises:
        ShapeMismatchError: If params, grads and state disagree in count or shape.
    """
    if not (len(params) == len(grads) == len(state.m) == len(state.v)):
        raise ShapeMismatchError(
            f"{len(params)} params, {len(grads)} grads, {len(state.m)} moments"
        )

    beta1, beta2 = config.beta1, config.beta2
    t = state.t + 1
    correction1 = 1.0 - beta1**t
    correction2 = 1.0 - beta2**t

    new_params: list[np.ndarray] = []
    new_m: list[np.ndarray] = []
    new_v: list[np.ndarray] = []
    for index, (theta, g, m, v) in enumerate(zip(params, grads, state.m, state.v)):
        theta = np.asarray(theta, dtype=np.float64)
        g = np.asarray(g, dtype=np.float64)
        if not (theta.shape == g.shape == m.shape == v.shape):
            raise ShapeMismatchError(
                f"parameter {index}: shape {theta.shape}, gradient {g.shape}, moments {m.shape}"
            )
        m = beta1 * m + (1.0 - beta1) * g
        v = beta2 * v + (1.0 - beta2) * (g * g)
        m_hat = m / correction1
        v_hat = v / correction2
        new_params.append(theta - config.learning_rate * m_hat / (np.sqrt(v_hat) + config.epsilon))
        new_m.append(m)
        new_v.append(v)

    return new_params, AdamState(m=tuple(new_m), v=tuple(new_v), t=t)
