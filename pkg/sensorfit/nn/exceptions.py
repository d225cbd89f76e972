"""Neural network exception classes.

Contains all exception classes for network operations:
- NetworkError: Base exception for network-related errors
- EmptyArchitectureError: A network was requested with no layers
- ArchitectureParseError: An architecture string could not be parsed
- ShapeMismatchError: Array shapes do not chain through the network
- CacheMismatchError: A forward cache does not belong to the model
- DivergenceError: Training produced a non-finite loss
"""

from sensorfit.exceptions import SensorFitError


class NetworkError(SensorFitError):
    """Base exception for network-related errors."""

    pass


class EmptyArchitectureError(NetworkError):
    """Raised when a network has no layers."""

    pass


class ArchitectureParseError(NetworkError):
    """Raised when an architecture string is malformed."""

    pass


class ShapeMismatchError(NetworkError):
    """Raised when an input, gradient or parameter has the wrong shape."""

    pass


class CacheMismatchError(NetworkError):
    """Raised when backward receives a cache from a different model."""

    pass


class DivergenceError(NetworkError):
    """Raised when an epoch loss is NaN or infinite."""

    def __init__(self, epoch: int, loss: float):
        self.epoch = epoch
        self.loss = loss
        super().__init__(f"training diverged at epoch {epoch}: loss={loss}")
