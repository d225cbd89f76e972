"""Deterministic .model.json persistence for sensorfit models.

This package provides:
- models: ModelFile and its sub-records, LoadedModel
- codec: save, load, load_file
"""

from sensorfit.model_io.exceptions import (
    CorruptModelFileError,
    CountMismatchError,
    ModelFileError,
    UnknownVersionError,
)
from sensorfit.model_io.models import (
    FORMAT_VERSION,
    ArchitectureRecord,
    GridAnchor,
    LayerRecord,
    LoadedModel,
    ModelFile,
    ModelKind,
    NormalizationRecord,
    Provenance,
)
from sensorfit.model_io.codec import (
    encode,
    expected_parameter_count,
    load,
    load_file,
    save,
    to_bytes,
)


__all__ = [
    "ModelFileError",
    "UnknownVersionError",
    "CountMismatchError",
    "CorruptModelFileError",
    "FORMAT_VERSION",
    "ModelKind",
    "LayerRecord",
    "ArchitectureRecord",
    "NormalizationRecord",
    "Provenance",
    "GridAnchor",
    "ModelFile",
    "LoadedModel",
    "encode",
    "to_bytes",
    "save",
    "load",
    "load_file",
    "expected_parameter_count",
]
