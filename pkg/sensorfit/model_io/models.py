"""Data models for sensorfit model_io module.

Contains:
- ModelKind: Which fitted model a file holds
- LayerRecord: Width, fan-in and activation of one stored layer
- ArchitectureRecord: Shape metadata needed to unflatten the parameters
- NormalizationRecord: Stored min-max constants
- Provenance: Where the parameters came from
- GridAnchor: Sample times that fix the dense prediction grid
- ModelFile: The full on-disk record
- LoadedModel: A decoded model with its params and provenance
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from sensorfit.classical.linear import eval_linear
from sensorfit.classical.models import LinearModel, PolynomialModel, SplineModel
from sensorfit.classical.polynomial import eval_polynomial
from sensorfit.classical.spline import eval_spline
from sensorfit.nn.models import Activation, MlpModel
from sensorfit.nn.network import predict
from sensorfit.series.models import ArrayLike, NormalizationParams

FORMAT_VERSION = 1


class ModelKind(Enum):
    MLP = "mlp"
    LINEAR = "linear"
    POLYNOMIAL = "polynomial"
    SPLINE = "spline"


class LayerRecord(BaseModel):
    """One dense layer's shape."""

    model_config = ConfigDict(extra="forbid")

    fan_in: int = Field(ge=1)
    width: int = Field(ge=1)
    activation: Activation


class ArchitectureRecord(BaseModel):
    """Shape metadata; which fields are set depends on the model kind.

    Attributes:
        input_width: Network input width (mlp).
        layers: Dense layers in order (mlp).
        architecture: Architecture string such as "1L,128R,1L" (mlp).
        degree: Polynomial degree (polynomial).
        n_knots: Knot count (spline).
        boundary: Spline boundary condition (spline).
    """

    model_config = ConfigDict(extra="forbid")

    input_width: Optional[int] = Field(default=None, ge=1)
    layers: Optional[list[LayerRecord]] = None
    architecture: Optional[str] = None
    degree: Optional[int] = Field(default=None, ge=0)
    n_knots: Optional[int] = Field(default=None, ge=3)
    boundary: Optional[str] = None


class NormalizationRecord(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    t_start: float
    t_end: float
    v_min: float
    v_max: float


class Provenance(BaseModel):
    """Training or fitting provenance.

    Attributes:
        method: Method that produced the model.
        seed: Initialization and shuffle seed.
        epochs: Epochs trained.
        final_loss: Full-data MSE after training, in normalized units.
    """

    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    method: Optional[str] = None
    seed: Optional[int] = None
    epochs: Optional[int] = None
    final_loss: Optional[float] = None


class GridAnchor(BaseModel):
    """First, second and last training sample time, in the model's input units.

    The dense prediction grid starts one sample step before first.
    """

    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    first: float
    second: float
    last: float

    @model_validator(mode="after")
    def check_order(self) -> "GridAnchor":
        if not self.first < self.second <= self.last:
            raise ValueError("grid anchor times must satisfy first < second <= last")
        return self

    def times(self) -> list[float]:
        return [self.first, self.second, self.last]


class ModelFile(BaseModel):
    """A .model.json document.

    Attributes:
        format_version: Always FORMAT_VERSION for files this build writes.
        kind: Model kind.
        architecture: Shape metadata.
        parameter_count: Length of parameters.
        parameters: All parameters, flattened in the documented order.
        normalization: Min-max constants the model expects, if any.
        provenance: How the model was produced, if known.
        grid_anchor: Sample times that fix the dense prediction grid.
    """

    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    format_version: int
    kind: ModelKind
    architecture: ArchitectureRecord
    parameter_count: int = Field(ge=0)
    parameters: list[float]
    normalization: Optional[NormalizationRecord] = None
    provenance: Optional[Provenance] = None
    grid_anchor: Optional[GridAnchor] = None


AnyModel = Union[MlpModel, LinearModel, PolynomialModel, SplineModel]


@dataclass(frozen=True, eq=False)
class LoadedModel:
    """A decoded model file.

    Calling it evaluates the model in its own (normalized) input units.
    """

    kind: ModelKind
    model: AnyModel
    params: Optional[NormalizationParams]
    provenance: Optional[Provenance]
    grid_anchor: Optional[GridAnchor] = None

    def __call__(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if self.kind is ModelKind.MLP:
            return predict(self.model, x)
        if self.kind is ModelKind.LINEAR:
            return np.asarray(eval_linear(self.model, x), dtype=np.float64)
        if self.kind is ModelKind.POLYNOMIAL:
            return np.asarray(eval_polynomial(self.model, x), dtype=np.float64)
        return np.asarray(eval_spline(self.model, x), dtype=np.float64)
