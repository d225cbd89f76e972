"""Dense network construction, forward and backward passes.

Layer i computes a_i = act(a_{i-1} W_i^T + b_i) on a batch of row vectors.
The relu subgradient at exactly 0 is taken as 0.
"""

import math
from typing import Sequence

import numpy as np

from sensorfit.nn.exceptions import CacheMismatchError, EmptyArchitectureError, ShapeMismatchError
from sensorfit.nn.models import Activation, DenseLayer, ForwardCache, LayerSpec, MlpModel
from sensorfit.series.models import ArrayLike


def build_mlp(input_width: int, layers: Sequence[LayerSpec], seed: int) -> MlpModel:
    """Build a network with seeded Glorot-uniform weights and zero biases.

    Weights of each layer are drawn, in layer order, from
    U(-sqrt(6 / (fan_in + fan_out)), +sqrt(6 / (fan_in + fan_out))) using a
    PCG64 generator seeded with seed.

    Raises:
        EmptyArchitectureError: If layers is empty.
    """
    if not layers:
        raise EmptyArchitectureError("a network needs at least one layer")

    rng = np.random.default_rng(seed)
    built = []
    fan_in = input_width
    for spec in layers:
        limit = math.sqrt(6.0 / (fan_in + spec.width))
        weights = rng.uniform(-limit, limit, size=(spec.width, fan_in))
        built.append(DenseLayer(weights, np.zeros(spec.width), spec.activation))
        fan_in = spec.width
    return MlpModel(input_width=input_width, layers=tuple(built))


def _as_batch(model: MlpModel, inputs: ArrayLike) -> np.ndarray:
    """Coerce inputs to shape (batch, input_width)."""
    batch = np.asarray(inputs, dtype=np.float64)
    if batch.ndim == 1 and model.input_width == 1:
        batch = batch.reshape(-1, 1)
    if batch.ndim != 2 or batch.shape[1] != model.input_width:
        raise ShapeMismatchError(
            f"inputs of shape {batch.shape} do not match input width {model.input_width}"
        )
    return batch


def _activate(z: np.ndarray, activation: Activation) -> np.ndarray:
    if activation is Activation.RELU:
        return np.maximum(z, 0.0)
    return z


def propagate(
    params: Sequence[np.ndarray],
    activations: Sequence[Activation],
    batch: np.ndarray,
    keep_cache: bool = False,
) -> tuple[np.ndarray, ForwardCache | None]:
    """Run a batch through raw parameter arrays [W0, b0, W1, b1, ...]."""
    inputs = []
    pre = []
    a = batch
    for index, activation in enumerate(activations):
        weights, biases = params[2 * index], params[2 * index + 1]
        z = a @ weights.T + biases
        if keep_cache:
            inputs.append(a)
            pre.append(z)
        a = _activate(z, activation)
    cache = ForwardCache(inputs=tuple(inputs), pre_activations=tuple(pre)) if keep_cache else None
    return a, cache


def forward(model: MlpModel, inputs: ArrayLike) -> tuple[np.ndarray, ForwardCache]:
    """Forward pass keeping what backward needs.

    Args:
        model: The network.
        inputs: Shape (batch, input_width); a 1-D array is accepted for width 1.

    Returns:
        Tuple of (outputs of shape (batch, output_width), cache).

    Raises:
        ShapeMismatchError: If inputs do not match the input width.
    """
    batch = _as_batch(model, inputs)
    outputs, cache = propagate(model.parameters(), model.activations, batch, keep_cache=True)
    return outputs, cache


def backward(
    model: MlpModel,
    cache: ForwardCache,
    output_gradient: ArrayLike,
) -> list[np.ndarray]:
    """Reverse-mode gradients of a scalar loss w.r.t. every parameter.

    Args:
        model: The network the cache came from.
        cache: Result of forward(model, ...).
        output_gradient: dLoss/dOutputs, shape (batch, output_width); a 1-D
            array is accepted for output width 1.

    Returns:
        Gradients [dW0, db0, dW1, db1, ...] mirroring model.parameters().

    Raises:
        CacheMismatchError: If the cache does not fit the model or the gradient.
    """
    if len(cache.inputs) != len(model.layers) or len(cache.pre_activations) != len(model.layers):
        raise CacheMismatchError(
            f"cache holds {len(cache.inputs)} layers, model has {len(model.layers)}"
        )
    for index, layer in enumerate(model.layers):
        a, z = cache.inputs[index], cache.pre_activations[index]
        if a.ndim != 2 or a.shape[1] != layer.fan_in or z.shape != (a.shape[0], layer.fan_out):
            raise CacheMismatchError(f"cache entry {index} does not match layer {index}")

    delta = np.asarray(output_gradient, dtype=np.float64)
    expected = cache.pre_activations[-1].shape
    if delta.ndim == 1 and expected[1] == 1:
        delta = delta.reshape(-1, 1)
    if delta.shape != expected:
        raise CacheMismatchError(
            f"output gradient of shape {delta.shape} does not match outputs {expected}"
        )

    grads: list[np.ndarray] = [np.empty(0)] * (2 * len(model.layers))
    for index in range(len(model.layers) - 1, -1, -1):
        layer = model.layers[index]
        if layer.activation is Activation.RELU:
            delta = delta * (cache.pre_activations[index] > 0.0)
        grads[2 * index] = delta.T @ cache.inputs[index]
        grads[2 * index + 1] = delta.sum(axis=0)
        if index:
            delta = delta @ layer.weights
    return grads


def predict(model: MlpModel, times: ArrayLike) -> np.ndarray:
    """Evaluate a width-1 network on a sequence of times.

    Returns:
        One output per time, as a 1-D array (empty for empty input).

    Raises:
        ShapeMismatchError: If the model is not 1-in/1-out.
    """
    if model.input_width != 1 or model.output_width != 1:
        raise ShapeMismatchError(
            f"predict needs a 1-in/1-out network, got {model.input_width}-in/{model.output_width}-out"
        )
    times = np.asarray(times, dtype=np.float64).reshape(-1)
    if times.size == 0:
        return np.empty(0)
    outputs, _ = propagate(model.parameters(), model.activations, times.reshape(-1, 1))
    return outputs[:, 0]
