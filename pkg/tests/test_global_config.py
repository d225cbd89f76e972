"""Tests for sensorfit.global_config module."""

from pathlib import Path

import pytest
import yaml

from sensorfit.cli.options import resolve_training
from sensorfit.config import DEFAULT_ARCHITECTURE, DEFAULT_EPOCHS, DEFAULT_GRID_POINTS
from sensorfit.global_config import (
    GlobalConfigError,
    KNOWN_KEYS,
    default_config,
    ensure_global_config_dir,
    get_config_file_path,
    get_global_config_dir,
    get_value,
    is_configured,
    load_global_config,
    save_global_config,
    set_value,
)


class TestGlobalConfigDir:
    """Tests for global config directory functions."""

    def test_get_global_config_dir_returns_path(self):
        """Test that get_global_config_dir returns a Path."""
        result = get_global_config_dir()
        assert isinstance(result, Path)
        assert ".sensorfit" in str(result)

    def test_ensure_global_config_dir_creates_directory(self, isolated_config_dir):
        """Test that ensure_global_config_dir creates the directory."""
        result = ensure_global_config_dir()

        assert isolated_config_dir.exists()
        assert result == isolated_config_dir

    def test_config_file_path(self, isolated_config_dir):
        """Test that config file path ends with config.yaml."""
        assert get_config_file_path() == isolated_config_dir / "config.yaml"


class TestLoadSaveGlobalConfig:
    """Tests for loading and saving global config."""

    def test_load_returns_empty_if_missing(self):
        """Test that load returns empty dict if file doesn't exist."""
        assert load_global_config() == {}
        assert not is_configured()

    def test_save_then_load(self):
        """Test saving then loading config."""
        save_global_config({"train": {"epochs": 50}})

        assert load_global_config() == {"train": {"epochs": 50}}
        assert is_configured()

    def test_load_rejects_non_mapping(self, isolated_config_dir):
        isolated_config_dir.mkdir(parents=True)
        (isolated_config_dir / "config.yaml").write_text("- a\n- b\n")

        with pytest.raises(GlobalConfigError):
            load_global_config()

    def test_load_rejects_bad_yaml(self, isolated_config_dir):
        isolated_config_dir.mkdir(parents=True)
        (isolated_config_dir / "config.yaml").write_text("train: [unclosed\n")

        with pytest.raises(GlobalConfigError):
            load_global_config()

    def test_default_config_layout(self):
        """Test default_config mirrors KNOWN_KEYS."""
        config = default_config()

        assert set(config) == set(KNOWN_KEYS)
        assert config["train"]["architecture"] == DEFAULT_ARCHITECTURE
        assert config["predict"]["points"] == DEFAULT_GRID_POINTS


class TestGetSetValue:
    """Tests for get_value and set_value."""

    def test_builtin_default(self):
        """Test the built-in default applies without a config file."""
        assert get_value("train.epochs") == DEFAULT_EPOCHS

    def test_config_overrides_default(self):
        set_value("train.epochs", "250")

        assert get_value("train.epochs") == 250

    def test_flag_overrides_config(self):
        """Test a command-line value wins over config.yaml."""
        set_value("predict.points", "500")

        assert get_value("predict.points", 42) == 42

    def test_set_parses_value(self, isolated_config_dir):
        """Test values are stored with their parsed types."""
        assert set_value("train.learning_rate", "0.01") == 0.01

        stored = yaml.safe_load((isolated_config_dir / "config.yaml").read_text())
        assert stored == {"train": {"learning_rate": 0.01}}

    def test_set_keeps_other_keys(self):
        set_value("train.seed", "3")
        set_value("predict.points", "200")

        assert load_global_config() == {"train": {"seed": 3}, "predict": {"points": 200}}

    @pytest.mark.parametrize("key", ["train.colour", "nope.epochs", "epochs"])
    def test_unknown_key(self, key):
        with pytest.raises(GlobalConfigError, match="Unknown config key"):
            get_value(key)
        with pytest.raises(GlobalConfigError):
            set_value(key, "1")

    def test_invalid_value(self):
        with pytest.raises(GlobalConfigError, match="Invalid value"):
            set_value("train.epochs", "many")

    def test_invalid_stored_value(self):
        """Test a hand-edited config.yaml with a bad value."""
        save_global_config({"train": {"seed": "abc"}})

        with pytest.raises(GlobalConfigError):
            get_value("train.seed")


class TestResolveTraining:
    """Tests for the precedence applied to training options."""

    def test_precedence(self):
        """Test flag > config.yaml > built-in for every training key."""
        set_value("train.epochs", "300")
        set_value("train.architecture", "1L,16R,1L")

        resolved = resolve_training(epochs=7)

        assert resolved["epochs"] == 7
        assert resolved["architecture"] == "1L,16R,1L"
        assert resolved["batch"] == "full"
        assert resolved["seed"] == 0
