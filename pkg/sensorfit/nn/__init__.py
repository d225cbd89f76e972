"""From-scratch dense network for sensorfit.

This package provides:
- models: LayerSpec, MlpModel, TrainConfig, TrainReport and friends
- architecture: "1L,128R,..." string parsing
- network: build_mlp, forward, backward, predict
- loss: mse_loss
- optim: adam_step
- training: train
- gradcheck: gradient_check
- summary: summarize, format_summary
"""

from sensorfit.nn.exceptions import (
    ArchitectureParseError,
    CacheMismatchError,
    DivergenceError,
    EmptyArchitectureError,
    NetworkError,
    ShapeMismatchError,
)
from sensorfit.nn.models import (
    Activation,
    AdamState,
    DenseLayer,
    ForwardCache,
    GradientCheckResult,
    LayerSpec,
    LayerSummary,
    MlpModel,
    ModelSummary,
    TrainConfig,
    TrainReport,
)
from sensorfit.nn.architecture import (
    DEFAULT_LAYERS,
    count_parameters,
    format_architecture,
    parse_architecture,
)
from sensorfit.nn.network import backward, build_mlp, forward, predict
from sensorfit.nn.loss import mse_loss
from sensorfit.nn.optim import adam_step
from sensorfit.nn.training import train
from sensorfit.nn.gradcheck import gradient_check, relative_error
from sensorfit.nn.summary import format_summary, summarize


__all__ = [
    # Exceptions
    "NetworkError",
    "EmptyArchitectureError",
    "ArchitectureParseError",
    "ShapeMismatchError",
    "CacheMismatchError",
    "DivergenceError",
    # Models
    "Activation",
    "LayerSpec",
    "DenseLayer",
    "MlpModel",
    "ForwardCache",
    "AdamState",
    "GradientCheckResult",
    "TrainConfig",
    "TrainReport",
    "LayerSummary",
    "ModelSummary",
    # Architecture
    "DEFAULT_LAYERS",
    "parse_architecture",
    "format_architecture",
    "count_parameters",
    # Operations
    "build_mlp",
    "forward",
    "backward",
    "predict",
    "mse_loss",
    "adam_step",
    "train",
    "gradient_check",
    "relative_error",
    "summarize",
    "format_summary",
]
