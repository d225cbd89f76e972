"""Shared test fixtures and configuration."""

import logging
import tempfile
from pathlib import Path

import numpy as np
import pytest

from sensorfit.nn.models import LayerSpec, TrainConfig
from sensorfit.nn.architecture import parse_architecture
from sensorfit.series.models import TimeSeries


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture(autouse=True)
def isolated_config_dir(temp_dir, mocker):
    """Keep every test away from the real ~/.sensorfit."""
    config_dir = temp_dir / ".sensorfit"
    mocker.patch("sensorfit.global_config._CONFIG_DIR", config_dir)
    return config_dir


@pytest.fixture(autouse=True)
def reset_sensorfit_logger():
    """Undo configure_logging so caplog sees records again."""
    yield
    logger = logging.getLogger("sensorfit")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)
    logger.propagate = True


@pytest.fixture
def sample_csv(temp_dir):
    """A small Time,Message file shaped like the lead-distance sample."""
    path = temp_dir / "sample.csv"
    times = np.linspace(0.0, 2.0, 21)
    values = 40.0 + 10.0 * np.sin(times) + 0.5 * np.cos(7.0 * times)
    lines = ["Time,Message"] + [f"{t!r},{v!r}" for t, v in zip(times.tolist(), values.tolist())]
    path.write_text("\n".join(lines) + "\n")
    return path


@pytest.fixture
def unit_series():
    """Twelve samples of a smooth curve already on [0, 1] x [0, 1]."""
    times = np.linspace(0.0, 1.0, 12)
    values = 0.5 + 0.4 * np.sin(2.0 * np.pi * times)
    values = (values - values.min()) / (values.max() - values.min())
    return TimeSeries(times, values)


@pytest.fixture
def tiny_layers():
    """A small relu network for fast training tests."""
    return parse_architecture("1L,8R,8R,1L")


@pytest.fixture
def small_relu_layers():
    return [
        LayerSpec(width=4, activation="relu"),
        LayerSpec(width=3, activation="relu"),
        LayerSpec(width=1, activation="linear"),
    ]


@pytest.fixture
def quick_config():
    """Short full-batch training run."""
    return TrainConfig(epochs=20, seed=0)
