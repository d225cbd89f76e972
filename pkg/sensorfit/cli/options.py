"""Resolved options of each subcommand.

Commands build these from flags, the user config file and built-in
defaults; manifests store them verbatim and 'rerun' validates them back.
"""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from sensorfit import global_config
from sensorfit.config import DEFAULT_GRID_POINTS, DEFAULT_METHODS, DEFAULT_SYNTHETIC_PRESET, Method
from sensorfit.cli.utils import parse_batch
from sensorfit.nn.architecture import parse_architecture
from sensorfit.nn.models import LayerSpec, TrainConfig
from sensorfit.series.models import NormalizationParams


class _Options(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    out_dir: str

    def inputs(self) -> list[str]:
        return []


class TrainingOptions(_Options):
    """Network and optimizer settings shared by train and compare."""

    epochs: int = Field(ge=1)
    seed: int = Field(ge=0)
    batch: str = "full"
    learning_rate: float = Field(gt=0)
    architecture: str
    log_every: int = Field(ge=1)

    @field_validator("batch")
    @classmethod
    def check_batch(cls, v: str) -> str:
        size = parse_batch(v)
        return "full" if size is None else str(size)

    def train_config(self) -> TrainConfig:
        return TrainConfig(
            epochs=self.epochs,
            batch_size=parse_batch(self.batch),
            learning_rate=self.learning_rate,
            seed=self.seed,
            log_every=self.log_every,
        )

    def layers(self) -> list[LayerSpec]:
        return parse_architecture(self.architecture)


def resolve_training(
    epochs: Optional[int] = None,
    seed: Optional[int] = None,
    batch: Optional[str] = None,
    learning_rate: Optional[float] = None,
    architecture: Optional[str] = None,
    log_every: Optional[int] = None,
) -> dict:
    """Training fields with flag > config.yaml > built-in precedence applied."""
    flags = {
        "epochs": epochs,
        "seed": seed,
        "batch": batch,
        "learning_rate": learning_rate,
        "architecture": architecture,
        "log_every": log_every,
    }
    return {key: global_config.get_value(f"train.{key}", value) for key, value in flags.items()}


class TrainOptions(TrainingOptions):
    """Options of 'sensorfit train'.

    Attributes:
        input: Time,Message CSV to train on.
        already_normalized: Train on the file as is instead of normalizing it.
        time_range: Original (start, end) times of already-normalized data.
        value_range: Original (min, max) values of already-normalized data.
    """

    input: str
    already_normalized: bool = False
    time_range: Optional[tuple[float, float]] = None
    value_range: Optional[tuple[float, float]] = None

    @model_validator(mode="after")
    def check_ranges(self) -> "TrainOptions":
        if not self.already_normalized and (self.time_range or self.value_range):
            raise ValueError("--time-range and --value-range need --already-normalized")
        return self

    def known_params(self) -> Optional[NormalizationParams]:
        """Original-scale params for already-normalized data, identity where unset."""
        if not self.already_normalized:
            return None
        t_start, t_end = self.time_range or (0.0, 1.0)
        v_min, v_max = self.value_range or (0.0, 1.0)
        return NormalizationParams(t_start=t_start, t_end=t_end, v_min=v_min, v_max=v_max)

    def inputs(self) -> list[str]:
        return [self.input]


class PredictOptions(_Options):
    """Options of 'sensorfit predict'.

    Attributes:
        model: Model file to evaluate.
        points: Dense grid size.
        data: Optional original CSV to plot under the prediction.
    """

    model: str
    points: int = Field(default=DEFAULT_GRID_POINTS, ge=2)
    data: Optional[str] = None

    def inputs(self) -> list[str]:
        return [self.model] + ([self.data] if self.data else [])


class DerivativeOptions(_Options):
    """Options of 'sensorfit derivative'."""

    input: str

    def inputs(self) -> list[str]:
        return [self.input]


class CompareOptions(TrainingOptions):
    """Options of 'sensorfit compare'.

    Exactly one of input and synthetic is set; commands fill in the default
    preset when neither flag is given.
    """

    input: Optional[str] = None
    synthetic: Optional[str] = None
    methods: list[Method] = Field(default_factory=lambda: list(DEFAULT_METHODS))
    points: int = Field(default=DEFAULT_GRID_POINTS, ge=2)
    workers: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def check_source(self) -> "CompareOptions":
        if (self.input is None) == (self.synthetic is None):
            raise ValueError("give exactly one of an input CSV or --synthetic")
        return self

    def inputs(self) -> list[str]:
        if self.input:
            return [self.input]
        return [self.synthetic] if Path(self.synthetic).is_file() else []


class SynthOptions(_Options):
    """Options of 'sensorfit synth'."""

    synthetic: str = DEFAULT_SYNTHETIC_PRESET

    def inputs(self) -> list[str]:
        return [self.synthetic] if Path(self.synthetic).is_file() else []
