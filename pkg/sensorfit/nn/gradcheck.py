"""Compare backpropagated gradients with central finite differences."""

import logging
from dataclasses import replace

import numpy as np

from sensorfit.nn.loss import mse_loss
from sensorfit.nn.models import GradientCheckResult, MlpModel
from sensorfit.nn.network import backward, forward, propagate
from sensorfit.series.models import ArrayLike

logger = logging.getLogger(__name__)

DEFAULT_STEP = 1e-6
DENOMINATOR_FLOOR = 1e-8


def relative_error(analytic: float, numeric: float) -> float:
    """|a - n| / max(|a|, |n|, 1e-8)."""
    return abs(analytic - numeric) / max(abs(analytic), abs(numeric), DENOMINATOR_FLOOR)


def gradient_check(
    model: MlpModel,
    inputs: ArrayLike,
    targets: ArrayLike,
    h: float = DEFAULT_STEP,
    dtype: type = np.longdouble,
) -> GradientCheckResult:
    """Check every parameter's MSE gradient against (L(p + h) - L(p - h)) / 2h.

    Perturbed losses are computed in dtype, extended precision by default,
    starting from the cached input of the perturbed layer.

    Args:
        model: Network under test.
        inputs: Batch of inputs, shape (batch, input_width).
        targets: Targets with as many elements as the outputs.
        h: Perturbation applied to one entry at a time.
        dtype: Float type of the perturbed forward passes.

    Returns:
        The entry with the largest relative error.
    """
    outputs, cache = forward(model, inputs)
    targets = np.asarray(targets, dtype=np.float64)
    _, output_gradient = mse_loss(outputs, targets)
    analytic = backward(model, cache, output_gradient)

    activations = model.activations
    wide = [np.array(p, dtype=dtype) for p in model.parameters()]
    wide_targets = targets.reshape(outputs.shape).astype(dtype)
    _, wide_cache = propagate(wide, activations, cache.inputs[0].astype(dtype), keep_cache=True)

    def loss_from(layer: int) -> np.floating:
        out, _ = propagate(wide[2 * layer:], activations[layer:], wide_cache.inputs[layer])
        diff = out - wide_targets
        return np.mean(diff * diff)

    worst = GradientCheckResult(
        max_relative_error=0.0, parameter_index=0, element=(0, 0), analytic=0.0, numeric=0.0, checked=0,
    )
    checked = 0
    for p_index, param in enumerate(wide):
        layer = p_index // 2
        for element in np.ndindex(param.shape):
            original = param[element]
            param[element] = original + h
            plus = loss_from(layer)
            param[element] = original - h
            minus = loss_from(layer)
            param[element] = original

            numeric = float((plus - minus) / (2 * h))
            exact = float(analytic[p_index][element])
            error = relative_error(exact, numeric)
            checked += 1
            if error > worst.max_relative_error or checked == 1:
                worst = GradientCheckResult(
                    max_relative_error=error,
                    parameter_index=p_index,
                    element=tuple(int(i) for i in element),
                    analytic=exact,
                    numeric=numeric,
                    checked=0,
                )

    logger.debug(
        "gradient check over %d entries: max relative error %.3g at parameter %d %s",
        checked, worst.max_relative_error, worst.parameter_index, worst.element,
    )
    return replace(worst, checked=checked)
