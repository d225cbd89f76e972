"""Canonical JSON encoding of fitted models.

Output is json.dumps with sorted keys, two-space indent and Python's
shortest round-trip float repr, so the same model always gives the same
bytes and load(save(m)) restores every parameter bit for bit.

Flat parameter order by kind:

- mlp: for each layer, weights row-major (fan_out x fan_in), then biases
- linear: [beta0, beta1]
- polynomial: coefficients, ascending degree
- spline: knot times, knot values, then the (n_knots - 1) x 4
  coefficient rows [c3, c2, c1, c0]
"""

import json
import logging
from pathlib import Path
from typing import Optional, Union

import numpy as np
from pydantic import ValidationError

from sensorfit.classical.models import LinearModel, PolynomialModel, SplineModel
from sensorfit.exceptions import SensorFitError
from sensorfit.model_io.exceptions import (
    CorruptModelFileError,
    CountMismatchError,
    UnknownVersionError,
)
from sensorfit.model_io.models import (
    FORMAT_VERSION,
    AnyModel,
    ArchitectureRecord,
    GridAnchor,
    LayerRecord,
    LoadedModel,
    ModelFile,
    ModelKind,
    NormalizationRecord,
    Provenance,
)
from sensorfit.nn.architecture import format_architecture
from sensorfit.nn.models import DenseLayer, LayerSpec, MlpModel
from sensorfit.series.models import NormalizationParams

logger = logging.getLogger(__name__)


def _flatten(arrays) -> list[float]:
    if not arrays:
        return []
    return np.concatenate([np.asarray(a, dtype=np.float64).ravel() for a in arrays]).tolist()


def encode(
    model: AnyModel,
    params: Optional[NormalizationParams] = None,
    provenance: Optional[Provenance] = None,
    anchor: Optional[GridAnchor] = None,
) -> ModelFile:
    """Build the ModelFile record of a model.

    Raises:
        TypeError: If model is not one of the supported kinds.
    """
    if isinstance(model, MlpModel):
        kind = ModelKind.MLP
        architecture = ArchitectureRecord(
            input_width=model.input_width,
            layers=[
                LayerRecord(fan_in=layer.fan_in, width=layer.fan_out, activation=layer.activation)
                for layer in model.layers
            ],
            architecture=format_architecture(model.layer_specs),
        )
        flat = _flatten(model.parameters())
    elif isinstance(model, LinearModel):
        kind = ModelKind.LINEAR
        architecture = ArchitectureRecord()
        flat = [model.beta0, model.beta1]
    elif isinstance(model, PolynomialModel):
        kind = ModelKind.POLYNOMIAL
        architecture = ArchitectureRecord(degree=model.degree)
        flat = _flatten([model.coefficients])
    elif isinstance(model, SplineModel):
        kind = ModelKind.SPLINE
        architecture = ArchitectureRecord(n_knots=model.n_knots, boundary=model.boundary)
        flat = _flatten([model.knot_times, model.knot_values, model.coefficients])
    else:
        raise TypeError(f"cannot serialize {type(model).__name__}")

    normalization = None
    if params is not None:
        normalization = NormalizationRecord(
            t_start=params.t_start, t_end=params.t_end, v_min=params.v_min, v_max=params.v_max,
        )
    return ModelFile(
        format_version=FORMAT_VERSION,
        kind=kind,
        architecture=architecture,
        parameter_count=len(flat),
        parameters=flat,
        normalization=normalization,
        provenance=provenance,
        grid_anchor=anchor,
    )


def to_bytes(record: ModelFile) -> bytes:
    """Canonical serialization of a record."""
    data = record.model_dump(mode="json")
    return (json.dumps(data, sort_keys=True, indent=2, allow_nan=False) + "\n").encode("utf-8")


def save(
    model: AnyModel,
    params: Optional[NormalizationParams] = None,
    provenance: Optional[Provenance] = None,
    destination: Optional[Union[str, Path]] = None,
    anchor: Optional[GridAnchor] = None,
) -> bytes:
    """Serialize a model, optionally writing it to destination.

    Args:
        model: MlpModel, LinearModel, PolynomialModel or SplineModel.
        params: Normalization the model expects its inputs in.
        provenance: Seed, epochs and loss of the run that produced it.
        destination: File to write; parent directories are created.
        anchor: First, second and last training time in model input units.

    Returns:
        The file contents.

    Raises:
        OSError: If destination cannot be written.
    """
    content = to_bytes(encode(model, params, provenance, anchor))
    if destination is not None:
        path = Path(destination)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(content)
        logger.info("wrote %s (%d bytes)", path, len(content))
    return content


def expected_parameter_count(kind: ModelKind, architecture: ArchitectureRecord) -> int:
    """Parameter count implied by the shape metadata.

    Raises:
        CorruptModelFileError: If the metadata needed for kind is missing or inconsistent.
    """
    if kind is ModelKind.LINEAR:
        return 2
    if kind is ModelKind.POLYNOMIAL:
        if architecture.degree is None:
            raise CorruptModelFileError("polynomial file has no degree")
        return architecture.degree + 1
    if kind is ModelKind.SPLINE:
        if architecture.n_knots is None:
            raise CorruptModelFileError("spline file has no n_knots")
        n = architecture.n_knots
        return 2 * n + 4 * (n - 1)

    if architecture.input_width is None or not architecture.layers:
        raise CorruptModelFileError("mlp file needs input_width and at least one layer")
    total = 0
    fan_in = architecture.input_width
    for index, layer in enumerate(architecture.layers):
        if layer.fan_in != fan_in:
            raise CorruptModelFileError(f"layer {index} fan_in {layer.fan_in} does not chain from {fan_in}")
        total += layer.fan_in * layer.width + layer.width
        fan_in = layer.width
    return total


def _decode_model(record: ModelFile) -> AnyModel:
    flat = np.asarray(record.parameters, dtype=np.float64)
    arch = record.architecture

    if record.kind is ModelKind.LINEAR:
        return LinearModel(beta0=flat[0], beta1=flat[1])
    if record.kind is ModelKind.POLYNOMIAL:
        return PolynomialModel(coefficients=flat)
    if record.kind is ModelKind.SPLINE:
        n = arch.n_knots
        return SplineModel(
            knot_times=flat[:n],
            knot_values=flat[n:2 * n],
            coefficients=flat[2 * n:].reshape(n - 1, 4),
            boundary=arch.boundary or "natural",
        )

    layers = []
    offset = 0
    for layer in arch.layers:
        size = layer.fan_in * layer.width
        weights = flat[offset:offset + size].reshape(layer.width, layer.fan_in)
        offset += size
        biases = flat[offset:offset + layer.width]
        offset += layer.width
        layers.append(DenseLayer(weights, biases, layer.activation))
    model = MlpModel(input_width=arch.input_width, layers=tuple(layers))

    if arch.architecture is not None:
        specs = [LayerSpec(width=layer.width, activation=layer.activation) for layer in arch.layers]
        if arch.architecture != format_architecture(specs):
            raise CorruptModelFileError(
                f"architecture string {arch.architecture!r} does not match the layer list"
            )
    return model


def _reject_constant(name: str):
    raise CorruptModelFileError(f"non-finite number {name} in model file")


def load(data: Union[bytes, str]) -> LoadedModel:
    """Decode and validate a model file.

    Raises:
        CorruptModelFileError: If the content is not JSON, misses fields, or
            holds an invalid model.
        UnknownVersionError: If format_version is not FORMAT_VERSION.
        CountMismatchError: If the parameter list does not fit the architecture.
    """
    try:
        text = data.decode("utf-8") if isinstance(data, bytes) else data
        document = json.loads(text, parse_constant=_reject_constant)
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise CorruptModelFileError(f"model file is not valid JSON: {e}") from e

    if not isinstance(document, dict) or "format_version" not in document:
        raise CorruptModelFileError("model file has no format_version")
    version = document["format_version"]
    if not isinstance(version, int) or isinstance(version, bool):
        raise CorruptModelFileError(f"format_version must be an integer, got {version!r}")
    if version != FORMAT_VERSION:
        raise UnknownVersionError(version, FORMAT_VERSION)

    try:
        record = ModelFile.model_validate(document)
    except ValidationError as e:
        raise CorruptModelFileError(f"model file failed validation: {e}") from e

    expected = expected_parameter_count(record.kind, record.architecture)
    if record.parameter_count != expected:
        raise CountMismatchError(expected, record.parameter_count, "parameter_count")
    if len(record.parameters) != expected:
        raise CountMismatchError(expected, len(record.parameters))

    try:
        model = _decode_model(record)
        params = None
        if record.normalization is not None:
            norm = record.normalization
            params = NormalizationParams(
                t_start=norm.t_start, t_end=norm.t_end, v_min=norm.v_min, v_max=norm.v_max,
            )
    except CorruptModelFileError:
        raise
    except SensorFitError as e:
        raise CorruptModelFileError(f"model file holds an invalid model: {e}") from e

    return LoadedModel(
        kind=record.kind,
        model=model,
        params=params,
        provenance=record.provenance,
        grid_anchor=record.grid_anchor,
    )


def load_file(path: Union[str, Path]) -> LoadedModel:
    """Read and decode a model file.

    Raises:
        OSError: If the file cannot be read.
    """
    return load(Path(path).read_bytes())
