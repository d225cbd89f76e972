"""Data models for sensorfit nn module.

Contains:
- Activation: Activation tags supported by dense layers
- LayerSpec: Width and activation of one dense layer
- DenseLayer: Weights, biases and activation of a built layer
- MlpModel: Ordered chain of dense layers
- ForwardCache: Per-layer records that backward needs
- AdamState: First/second moment accumulators and step counter
- GradientCheckResult: Worst analytic vs numeric gradient entry
- TrainConfig: Optimizer and loop hyperparameters
- TrainReport: Loss history and timing of a training run
- LayerSummary, ModelSummary: Printable description of a network
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from sensorfit.config import (
    DEFAULT_BETA1,
    DEFAULT_BETA2,
    DEFAULT_EPOCHS,
    DEFAULT_EPSILON,
    DEFAULT_LEARNING_RATE,
    DEFAULT_LOG_EVERY,
    DEFAULT_SEED,
)
from sensorfit.nn.exceptions import EmptyArchitectureError, NetworkError, ShapeMismatchError


class Activation(Enum):
    """Activation applied after a dense layer's affine map."""

    LINEAR = "linear"
    RELU = "relu"


class LayerSpec(BaseModel):
    """Width and activation of one dense layer."""

    model_config = ConfigDict(frozen=True)

    width: int = Field(ge=1)
    activation: Activation


@dataclass(frozen=True, eq=False)
class DenseLayer:
    """A built dense layer computing act(W x + b).

    Attributes:
        weights: Shape (fan_out, fan_in).
        biases: Shape (fan_out,).
        activation: Activation tag.
    """

    weights: np.ndarray
    biases: np.ndarray
    activation: Activation

    def __post_init__(self) -> None:
        weights = np.array(self.weights, dtype=np.float64)
        biases = np.array(self.biases, dtype=np.float64).reshape(-1)
        if weights.ndim != 2:
            raise ShapeMismatchError(f"weights must be 2-D, got shape {weights.shape}")
        if biases.size != weights.shape[0]:
            raise ShapeMismatchError(
                f"bias length {biases.size} does not match fan_out {weights.shape[0]}"
            )
        weights.setflags(write=False)
        biases.setflags(write=False)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "biases", biases)
        object.__setattr__(self, "activation", Activation(self.activation))

    @property
    def fan_in(self) -> int:
        return int(self.weights.shape[1])

    @property
    def fan_out(self) -> int:
        return int(self.weights.shape[0])

    @property
    def parameter_count(self) -> int:
        return int(self.weights.size + self.biases.size)


@dataclass(frozen=True, eq=False)
class MlpModel:
    """Feed-forward network of dense layers.

    Parameters are exposed as a flat list [W0, b0, W1, b1, ...], the order
    gradients and optimizer state follow.
    """

    input_width: int
    layers: tuple[DenseLayer, ...]

    def __post_init__(self) -> None:
        layers = tuple(self.layers)
        if not layers:
            raise EmptyArchitectureError("a network needs at least one layer")
        if self.input_width < 1:
            raise ShapeMismatchError(f"input width must be >= 1, got {self.input_width}")
        fan_in = self.input_width
        for index, layer in enumerate(layers):
            if layer.fan_in != fan_in:
                raise ShapeMismatchError(
                    f"layer {index} expects fan_in {fan_in}, has {layer.fan_in}"
                )
            if not (np.all(np.isfinite(layer.weights)) and np.all(np.isfinite(layer.biases))):
                raise NetworkError(f"layer {index} has non-finite parameters")
            fan_in = layer.fan_out
        object.__setattr__(self, "input_width", int(self.input_width))
        object.__setattr__(self, "layers", layers)

    @property
    def output_width(self) -> int:
        return self.layers[-1].fan_out

    @property
    def parameter_count(self) -> int:
        return sum(layer.parameter_count for layer in self.layers)

    @property
    def layer_specs(self) -> list[LayerSpec]:
        return [LayerSpec(width=layer.fan_out, activation=layer.activation) for layer in self.layers]

    @property
    def activations(self) -> list[Activation]:
        return [layer.activation for layer in self.layers]

    def parameters(self) -> list[np.ndarray]:
        """Flat parameter list [W0, b0, W1, b1, ...] (read-only views)."""
        params: list[np.ndarray] = []
        for layer in self.layers:
            params.extend((layer.weights, layer.biases))
        return params

    def with_parameters(self, params: Sequence[np.ndarray]) -> "MlpModel":
        """Return a model with the same architecture and new parameters."""
        if len(params) != 2 * len(self.layers):
            raise ShapeMismatchError(
                f"expected {2 * len(self.layers)} parameter arrays, got {len(params)}"
            )
        layers = []
        for index, layer in enumerate(self.layers):
            weights, biases = params[2 * index], params[2 * index + 1]
            if np.shape(weights) != layer.weights.shape or np.shape(biases) != layer.biases.shape:
                raise ShapeMismatchError(f"parameter shapes of layer {index} changed")
            layers.append(DenseLayer(weights, biases, layer.activation))
        return MlpModel(input_width=self.input_width, layers=tuple(layers))


@dataclass(frozen=True, eq=False)
class ForwardCache:
    """What a forward pass recorded for the backward pass.

    Attributes:
        inputs: Input to each layer, shape (batch, fan_in).
        pre_activations: W x + b of each layer, shape (batch, fan_out).
    """

    inputs: tuple[np.ndarray, ...]
    pre_activations: tuple[np.ndarray, ...]


@dataclass(frozen=True, eq=False)
class AdamState:
    """Adam accumulators, one pair per parameter array.

    Attributes:
        m: First-moment estimates.
        v: Second-moment estimates (non-negative).
        t: Number of steps taken.
    """

    m: tuple[np.ndarray, ...]
    v: tuple[np.ndarray, ...]
    t: int = 0

    @classmethod
    def zeros_like(cls, params: Sequence[np.ndarray]) -> "AdamState":
        """Fresh state for the given parameter arrays."""
        return cls(
            m=tuple(np.zeros_like(p, dtype=np.float64) for p in params),
            v=tuple(np.zeros_like(p, dtype=np.float64) for p in params),
            t=0,
        )


@dataclass(frozen=True)
class GradientCheckResult:
    """Worst disagreement between analytic and finite-difference gradients.

    Attributes:
        max_relative_error: |a - n| / max(|a|, |n|, 1e-8) at the worst entry.
        parameter_index: Position of the worst entry's array in parameters().
        element: Index of the worst entry inside that array.
        analytic: Backpropagated gradient at the worst entry.
        numeric: Central-difference estimate at the worst entry.
        checked: Number of entries compared.
    """

    max_relative_error: float
    parameter_index: int
    element: tuple[int, ...]
    analytic: float
    numeric: float
    checked: int


class TrainConfig(BaseModel):
    """Training hyperparameters.

    Attributes:
        epochs: Full passes over the data.
        batch_size: Mini-batch size, or None for full-batch steps.
        learning_rate: Adam step size.
        beta1: First-moment decay, in (0, 1).
        beta2: Second-moment decay, in (0, 1).
        epsilon: Denominator guard.
        seed: Seed of the shuffle stream.
        shuffle: Reshuffle mini-batches every epoch.
        log_every: Epoch interval of INFO progress lines.
    """

    model_config = ConfigDict(frozen=True)

    epochs: int = Field(default=DEFAULT_EPOCHS, ge=1)
    batch_size: Optional[int] = Field(default=None, ge=1)
    learning_rate: float = Field(default=DEFAULT_LEARNING_RATE, gt=0)
    beta1: float = Field(default=DEFAULT_BETA1, gt=0, lt=1)
    beta2: float = Field(default=DEFAULT_BETA2, gt=0, lt=1)
    epsilon: float = Field(default=DEFAULT_EPSILON, gt=0)
    seed: int = Field(default=DEFAULT_SEED, ge=0)
    shuffle: bool = True
    log_every: int = Field(default=DEFAULT_LOG_EVERY, ge=1)


class TrainReport(BaseModel):
    """Outcome of a training run.

    Attributes:
        loss_history: Mean batch loss of every epoch.
        initial_loss: Full-data MSE before the first step.
        final_loss: Full-data MSE after the last step.
        wall_time: Seconds spent in the loop.
        seed: Shuffle seed, echoed.
        epochs: Epochs run.
        steps: Optimizer steps taken.
    """

    loss_history: list[float]
    initial_loss: float
    final_loss: float
    wall_time: float
    seed: int
    epochs: int
    steps: int


@dataclass(frozen=True)
class LayerSummary:
    """One row of a model summary."""

    index: int
    activation: Activation
    output_shape: tuple[Optional[int], int]
    parameter_count: int


@dataclass(frozen=True)
class ModelSummary:
    """Per-layer rows and the total parameter count of a network."""

    input_width: int
    layers: tuple[LayerSummary, ...]
    total_parameters: int
