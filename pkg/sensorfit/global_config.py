"""User-level defaults for sensorfit.

Handles configuration stored in ~/.sensorfit/:
- config.yaml: default training and prediction settings

Precedence is command-line flag > config.yaml > built-in default from
sensorfit.config. Manifests always record the resolved values.
"""

from pathlib import Path
from typing import Any, Callable, Dict, Optional

import yaml

from sensorfit.config import (
    DEFAULT_ARCHITECTURE,
    DEFAULT_BATCH,
    DEFAULT_EPOCHS,
    DEFAULT_GRID_POINTS,
    DEFAULT_LEARNING_RATE,
    DEFAULT_LOG_EVERY,
    DEFAULT_SEED,
)
from sensorfit.exceptions import SensorFitError


class GlobalConfigError(SensorFitError):
    """Raised when there's an error with global configuration."""
    pass


_CONFIG_DIR = Path.home() / ".sensorfit"

# section -> key -> (parser, built-in default)
KNOWN_KEYS: Dict[str, Dict[str, tuple[Callable[[str], Any], Any]]] = {
    "train": {
        "epochs": (int, DEFAULT_EPOCHS),
        "seed": (int, DEFAULT_SEED),
        "batch": (str, DEFAULT_BATCH),
        "learning_rate": (float, DEFAULT_LEARNING_RATE),
        "architecture": (str, DEFAULT_ARCHITECTURE),
        "log_every": (int, DEFAULT_LOG_EVERY),
    },
    "predict": {
        "points": (int, DEFAULT_GRID_POINTS),
    },
}


def get_global_config_dir() -> Path:
    """Get the global sensorfit configuration directory.

    Returns:
        Path to ~/.sensorfit/
    """
    return _CONFIG_DIR


def ensure_global_config_dir() -> Path:
    """Ensure the global config directory exists.

    Returns:
        Path to ~/.sensorfit/
    """
    config_dir = get_global_config_dir()
    config_dir.mkdir(parents=True, exist_ok=True)
    return config_dir


def get_config_file_path() -> Path:
    """Get path to config.yaml file.

    Returns:
        Path to ~/.sensorfit/config.yaml
    """
    return get_global_config_dir() / "config.yaml"


def is_configured() -> bool:
    """Check whether a config.yaml exists."""
    return get_config_file_path().exists()


def load_global_config() -> Dict[str, Any]:
    """Load global configuration from ~/.sensorfit/config.yaml.

    Returns:
        Dictionary with configuration values. Empty dict if file doesn't exist.
    """
    config_file = get_config_file_path()

    if not config_file.exists():
        return {}

    try:
        with open(config_file, "r") as f:
            config = yaml.safe_load(f) or {}
    except Exception as e:
        raise GlobalConfigError(f"Failed to load config from {config_file}: {e}")

    if not isinstance(config, dict):
        raise GlobalConfigError(f"{config_file} must contain a mapping")
    return config


def save_global_config(config: Dict[str, Any]) -> None:
    """Save global configuration to ~/.sensorfit/config.yaml.

    Args:
        config: Configuration dictionary to save.
    """
    ensure_global_config_dir()
    config_file = get_config_file_path()

    try:
        with open(config_file, "w") as f:
            yaml.dump(config, f, default_flow_style=False, sort_keys=False)
    except Exception as e:
        raise GlobalConfigError(f"Failed to save config to {config_file}: {e}")


def default_config() -> Dict[str, Dict[str, Any]]:
    """The built-in defaults in config.yaml layout."""
    return {
        section: {key: default for key, (_, default) in keys.items()}
        for section, keys in KNOWN_KEYS.items()
    }


def _split_key(dotted: str) -> tuple[str, str]:
    section, _, key = dotted.partition(".")
    if section not in KNOWN_KEYS or key not in KNOWN_KEYS[section]:
        known = ", ".join(f"{s}.{k}" for s, keys in KNOWN_KEYS.items() for k in keys)
        raise GlobalConfigError(f"Unknown config key {dotted!r}. Known keys: {known}")
    return section, key


def get_value(dotted: str, override: Optional[Any] = None) -> Any:
    """Resolve a setting: override if given, else config.yaml, else built-in default.

    Args:
        dotted: Key such as "train.epochs".
        override: Value from the command line, or None.
    """
    if override is not None:
        return override
    section, key = _split_key(dotted)
    parser, default = KNOWN_KEYS[section][key]
    stored = load_global_config().get(section) or {}
    if key not in stored or stored[key] is None:
        return default
    try:
        return parser(stored[key])
    except (TypeError, ValueError) as e:
        raise GlobalConfigError(f"Invalid value for {dotted} in {get_config_file_path()}: {e}")


def set_value(dotted: str, raw: str) -> Any:
    """Parse raw for a known key and store it in config.yaml.

    Returns:
        The parsed value that was stored.
    """
    section, key = _split_key(dotted)
    parser, _ = KNOWN_KEYS[section][key]
    try:
        value = parser(raw)
    except (TypeError, ValueError) as e:
        raise GlobalConfigError(f"Invalid value for {dotted}: {raw!r} ({e})")

    config = load_global_config()
    config.setdefault(section, {})
    config[section][key] = value
    save_global_config(config)
    return value
