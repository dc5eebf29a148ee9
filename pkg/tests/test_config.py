"""Tests for configuration management."""

from __future__ import annotations

from pathlib import Path

import pytest
import yaml

from skeingen.core.config import (
    Config,
    ConfigManager,
    DefaultsConfig,
    LoggingConfig,
    get_default_config_path,
)
from skeingen.core.exceptions import ConfigurationError


class TestLoggingConfig:
    """Tests for LoggingConfig model."""

    def test_default_values(self) -> None:
        """Test default logging configuration values."""
        config = LoggingConfig()
        assert config.level == "WARNING"
        assert config.file is None

    def test_valid_log_levels(self) -> None:
        """Test that valid log levels are accepted."""
        for level in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]:
            config = LoggingConfig(level=level)
            assert config.level == level

    def test_log_level_case_insensitive(self) -> None:
        """Test that log levels are case-insensitive."""
        config = LoggingConfig(level="debug")
        assert config.level == "DEBUG"

    def test_invalid_log_level(self) -> None:
        """Test that invalid log levels raise an error."""
        with pytest.raises(ValueError, match="Invalid log level"):
            LoggingConfig(level="INVALID")


class TestDefaultsConfig:
    """Tests for DefaultsConfig model."""

    def test_default_values(self) -> None:
        """Test default configuration values."""
        config = DefaultsConfig()
        assert config.max_twist == 8
        assert config.additivity_bound == 4
        assert config.termination_bound_factor == 4
        assert config.workers == 1
        assert config.output_format == "text"

    def test_custom_values(self) -> None:
        """Test custom configuration values."""
        config = DefaultsConfig(max_twist=12, workers=8, output_format="json")
        assert config.max_twist == 12
        assert config.workers == 8
        assert config.output_format == "json"

    def test_validation_constraints(self) -> None:
        """Test that out-of-range values are rejected."""
        with pytest.raises(ValueError):
            DefaultsConfig(max_twist=0)
        with pytest.raises(ValueError):
            DefaultsConfig(workers=65)
        with pytest.raises(ValueError):
            DefaultsConfig(additivity_bound=-1)
        with pytest.raises(ValueError):
            DefaultsConfig(output_format="xml")


class TestConfig:
    """Tests for the top-level Config model."""

    def test_empty_config(self) -> None:
        """Test configuration with all defaults."""
        config = Config()
        assert config.defaults.max_twist == 8
        assert config.logging.level == "WARNING"

    def test_termination_bound(self) -> None:
        """Default bound scales with the largest coefficient."""
        config = Config(defaults={"termination_bound_factor": 3})
        assert config.termination_bound((3, 2, 5)) == 15

    def test_env_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Nested values can be set through SKEINGEN_* variables."""
        monkeypatch.setenv("SKEINGEN_DEFAULTS__MAX_TWIST", "6")
        assert Config().defaults.max_twist == 6


class TestConfigManager:
    """Tests for ConfigManager."""

    def test_load_config(self, temp_config_file: Path) -> None:
        """Test loading configuration from file."""
        manager = ConfigManager(temp_config_file)
        assert manager.defaults.max_twist == 4
        assert manager.defaults.workers == 2
        assert manager.config.logging.level == "INFO"

    def test_missing_file_gives_defaults(self, temp_config_dir: Path) -> None:
        """A missing file yields defaults without touching disk."""
        config_path = temp_config_dir / "new_config.yaml"
        manager = ConfigManager(config_path)

        assert manager.defaults.max_twist == 8
        assert not config_path.exists()

    def test_default_path(self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
        """SKEINGEN_CONFIG overrides the home directory location."""
        assert get_default_config_path().name == "config.yaml"
        monkeypatch.setenv("SKEINGEN_CONFIG", str(tmp_path / "custom.yaml"))
        assert get_default_config_path() == tmp_path / "custom.yaml"

    def test_edited_example_config_loads(self, temp_config_dir: Path) -> None:
        """Edits to a written example config are picked up on load."""
        config_path = ConfigManager.create_example_config(temp_config_dir / "nested" / "edited.yaml")
        data = yaml.safe_load(config_path.read_text())
        data["defaults"]["workers"] = 3
        config_path.write_text(yaml.safe_dump(data))

        manager = ConfigManager(config_path)
        assert manager.defaults.workers == 3

    def test_invalid_yaml(self, temp_config_dir: Path) -> None:
        """Test loading invalid YAML raises error."""
        config_path = temp_config_dir / "invalid.yaml"
        config_path.write_text("{ invalid yaml content")

        with pytest.raises(ConfigurationError, match="Invalid YAML"):
            ConfigManager(config_path)

    def test_non_mapping(self, temp_config_dir: Path) -> None:
        """A YAML list is not a configuration."""
        config_path = temp_config_dir / "list.yaml"
        config_path.write_text("- 1\n- 2\n")

        with pytest.raises(ConfigurationError, match="mapping"):
            ConfigManager(config_path)

    def test_invalid_values(self, temp_config_dir: Path) -> None:
        """Out-of-range values are reported as configuration errors."""
        config_path = temp_config_dir / "bad.yaml"
        config_path.write_text(yaml.safe_dump({"defaults": {"max_twist": 0}}))

        with pytest.raises(ConfigurationError, match="Invalid configuration"):
            ConfigManager(config_path)

    def test_create_example_config(self, temp_config_dir: Path) -> None:
        """Test creating an example configuration file."""
        config_path = temp_config_dir / "example.yaml"
        result = ConfigManager.create_example_config(config_path)

        assert result == config_path
        assert config_path.exists()

        manager = ConfigManager(config_path)
        assert manager.defaults == DefaultsConfig()
        assert manager.config.logging.file is not None

    def test_to_dict(self, config_manager: ConfigManager) -> None:
        """Test converting configuration to dictionary."""
        data = config_manager.to_dict()

        assert data["defaults"]["max_twist"] == 4
        assert data["logging"]["level"] == "INFO"
        assert "file" not in data["logging"]
