"""Model file exception classes.

Contains:
- ModelFileError: Base exception for model file errors
- UnknownVersionError: The file's format_version is not supported
- CountMismatchError: The flat parameter list does not fit the architecture
- CorruptModelFileError: The file is not valid JSON or fails validation
"""

from sensorfit.exceptions import SensorFitError


class ModelFileError(SensorFitError):
    """Base exception for model file errors."""

    pass


class UnknownVersionError(ModelFileError):
    """Raised when format_version is not one this build reads."""

    def __init__(self, version, supported: int):
        self.version = version
        self.supported = supported
        super().__init__(f"unknown model file version {version!r}; this build reads version {supported}")


class CountMismatchError(ModelFileError):
    """Raised when the number of stored parameters disagrees with the metadata."""

    def __init__(self, expected: int, got: int, what: str = "parameters"):
        self.expected = expected
        self.got = got
        super().__init__(f"{what}: architecture needs {expected}, file has {got}")


class CorruptModelFileError(ModelFileError):
    """Raised when a model file cannot be parsed or validated."""

    pass
