"""Architecture strings such as "1L,128R,64R,32R,64R,128R,1L".

Each comma-separated token is a layer width followed by an activation
letter: L for linear, R for relu.
"""

import re
from typing import Sequence

from sensorfit.config import DEFAULT_ARCHITECTURE
from sensorfit.nn.exceptions import ArchitectureParseError, EmptyArchitectureError
from sensorfit.nn.models import Activation, LayerSpec

_TOKEN_RE = re.compile(r"^(?P<width>\d+)\s*(?P<act>[LR])$", re.IGNORECASE)

_LETTERS = {
    "L": Activation.LINEAR,
    "R": Activation.RELU,
}


def parse_architecture(text: str) -> list[LayerSpec]:
    """Parse an architecture string into layer specs.

    Raises:
        EmptyArchitectureError: If the string has no tokens.
        ArchitectureParseError: If a token is malformed or has width 0.
    """
    tokens = [token.strip() for token in text.split(",") if token.strip()]
    if not tokens:
        raise EmptyArchitectureError("architecture string is empty")

    specs = []
    for token in tokens:
        match = _TOKEN_RE.match(token)
        if not match:
            raise ArchitectureParseError(
                f"bad layer token {token!r}; expected <width><L|R>, e.g. 128R"
            )
        width = int(match.group("width"))
        if width < 1:
            raise ArchitectureParseError(f"layer width must be >= 1 in {token!r}")
        specs.append(LayerSpec(width=width, activation=_LETTERS[match.group("act").upper()]))
    return specs


def format_architecture(specs: Sequence[LayerSpec]) -> str:
    """Inverse of parse_architecture."""
    letter = {activation: key for key, activation in _LETTERS.items()}
    return ",".join(f"{spec.width}{letter[spec.activation]}" for spec in specs)


def count_parameters(input_width: int, specs: Sequence[LayerSpec]) -> int:
    """Total weights and biases of a dense chain."""
    total = 0
    fan_in = input_width
    for spec in specs:
        total += fan_in * spec.width + spec.width
        fan_in = spec.width
    return total


DEFAULT_LAYERS = parse_architecture(DEFAULT_ARCHITECTURE)
