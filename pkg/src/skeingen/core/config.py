"""Configuration management for skeingen.

This module provides a pydantic-based configuration system that supports:
- YAML configuration files
- Environment variable overrides (``SKEINGEN_DEFAULTS__MAX_TWIST=6``)
- Default values with validation

The default config location is ~/.skeingen/config.yaml, which can be
overridden with the SKEINGEN_CONFIG environment variable. Loading never
writes to disk; a missing file simply yields the defaults.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Annotated, Any, Literal

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from skeingen.core.exceptions import ConfigurationError


def get_default_config_path() -> Path:
    """Get the configuration file path.

    Returns:
        ``$SKEINGEN_CONFIG`` when set, otherwise ~/.skeingen/config.yaml.
    """
    env_path = os.environ.get("SKEINGEN_CONFIG")
    if env_path:
        return Path(env_path).expanduser()
    return Path.home() / ".skeingen" / "config.yaml"


def get_default_log_path() -> Path:
    return Path.home() / ".skeingen" / "logs" / "skeingen.log"


class LoggingConfig(BaseModel):
    """Logging configuration.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
        file: Path to log file (optional).
    """

    level: str = Field(default="WARNING", description="Log level")
    file: str | None = Field(default=None, description="Log file path")

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        """Validate log level is valid."""
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        v_upper = v.upper()
        if v_upper not in valid_levels:
            raise ValueError(f"Invalid log level: {v}. Must be one of {sorted(valid_levels)}")
        return v_upper


class DefaultsConfig(BaseModel):
    """Default values for the verification commands.

    Args:
        max_twist: Largest twist count checked by ``lemmas``.
        additivity_bound: Largest ``|m|, |n|`` for twist additivity.
        termination_bound_factor: ``termination`` checks exponents up to
            this factor times ``max(a, b, c)`` unless ``--bound`` is given.
        workers: Threads used for the generating-set scan.
        output_format: ``text`` or ``json``.
    """

    max_twist: Annotated[int, Field(ge=1, le=32)] = Field(
        default=8, description="Largest twist count for lemma checks"
    )
    additivity_bound: Annotated[int, Field(ge=0, le=16)] = Field(
        default=4, description="Largest |m|, |n| for additivity checks"
    )
    termination_bound_factor: Annotated[int, Field(ge=1, le=16)] = Field(
        default=4, description="Termination bound as a multiple of max(a, b, c)"
    )
    workers: Annotated[int, Field(ge=1, le=64)] = Field(
        default=1, description="Worker threads for candidate scans"
    )
    output_format: Literal["text", "json"] = Field(default="text", description="Report format")


class Config(BaseSettings):
    """Main configuration model for skeingen.

    Values from the YAML file take precedence over ``SKEINGEN_*``
    environment variables, which take precedence over the defaults.

    Example config.yaml:
        ```yaml
        defaults:
          max_twist: 8
          additivity_bound: 4
          termination_bound_factor: 4
          workers: 1
          output_format: text

        logging:
          level: WARNING
          file: ~/.skeingen/logs/skeingen.log
        ```
    """

    model_config = SettingsConfigDict(
        env_prefix="SKEINGEN_",
        env_nested_delimiter="__",
        extra="ignore",
    )

    defaults: DefaultsConfig = Field(default_factory=DefaultsConfig, description="Default values")
    logging: LoggingConfig = Field(default_factory=LoggingConfig, description="Logging config")

    def termination_bound(self, abc: tuple[int, int, int]) -> int:
        """Default termination bound for ``(a, b, c)``."""
        return self.defaults.termination_bound_factor * max(abc)


class ConfigManager:
    """Manages reading and writing skeingen configuration.

    Args:
        path: Optional path to config file. Uses default if not specified.

    Attributes:
        path: Path to the configuration file.
        config: The loaded and validated Config object.

    Example:
        >>> cm = ConfigManager()
        >>> cm.config.defaults.max_twist
        8
    """

    def __init__(self, path: Path | str | None = None) -> None:
        if path is None:
            self.path = get_default_config_path()
        else:
            self.path = Path(path).expanduser()
        self.config = self._load_or_create()

    def _load_or_create(self) -> Config:
        if self.path.exists():
            return self._load()
        return Config()

    def _load(self) -> Config:
        """Load and validate configuration from file.

        Raises:
            ConfigurationError: If the config file is invalid.
        """
        try:
            with self.path.open("r") as f:
                data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(
                f"Invalid YAML in config file: {e}",
                details={"path": str(self.path)},
            ) from e
        if not isinstance(data, dict):
            raise ConfigurationError(
                "Config file must contain a mapping",
                details={"path": str(self.path)},
            )
        try:
            return Config(**data)
        except ValidationError as e:
            raise ConfigurationError(
                f"Invalid configuration: {e.errors()[0]['msg']}",
                details={"path": str(self.path)},
            ) from e

    @property
    def defaults(self) -> DefaultsConfig:
        return self.config.defaults

    def to_dict(self) -> dict[str, Any]:
        return self.config.model_dump(exclude_none=True)

    @classmethod
    def create_example_config(cls, path: Path | None = None) -> Path:
        """Write an example configuration file.

        Args:
            path: Optional path for the config. Uses default if not specified.

        Returns:
            Path to the created config file.
        """
        path = get_default_config_path() if path is None else Path(path).expanduser()
        path.parent.mkdir(parents=True, exist_ok=True)

        example_config = {
            "defaults": DefaultsConfig().model_dump(),
            "logging": {
                "level": "WARNING",
                "file": str(get_default_log_path()),
            },
        }

        with path.open("w") as f:
            yaml.safe_dump(example_config, f, default_flow_style=False, sort_keys=False)

        return path
