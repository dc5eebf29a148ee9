"""Pytest configuration and fixtures for skeingen tests.

This module provides shared fixtures: surgery parameters from the
published examples, isolated configuration files and a CLI runner.
"""

from __future__ import annotations

import tempfile
from collections.abc import Generator
from pathlib import Path

import pytest
import yaml
from click.testing import CliRunner

from skeingen.core.config import ConfigManager
from skeingen.models.monomial import SurgeryParams

# Published generating sets, listed in exponent order.
GOLDEN_GENERATORS: dict[tuple[int, int, int], list[str]] = {
    (2, -2, 2): ["1", "z", "z^2", "y", "x"],
    (3, -2, 3): ["1", "z", "z^2", "z^3", "y", "x", "x^2"],
    (3, -2, 5): ["1", "z", "z^2", "z^3", "z^4", "z^5", "y", "x", "x^2"],
}


@pytest.fixture
def mixed_params() -> SurgeryParams:
    """M(2, -2, 2), the smallest mixed-sign example."""
    return SurgeryParams.of(2, -2, 2)


@pytest.fixture
def same_sign_params() -> SurgeryParams:
    """M(2, 2, 2)."""
    return SurgeryParams.of(2, 2, 2)


@pytest.fixture(autouse=True)
def isolated_env(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Keep tests away from the user's config and SKEINGEN_* settings."""
    for name in ("SKEINGEN_CONFIG", "SKEINGEN_DEBUG"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("HOME", str(tmp_path / "home"))


@pytest.fixture
def temp_config_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for config files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def sample_config_data() -> dict:
    """Create sample configuration data."""
    return {
        "defaults": {
            "max_twist": 4,
            "additivity_bound": 2,
            "termination_bound_factor": 2,
            "workers": 2,
            "output_format": "text",
        },
        "logging": {
            "level": "INFO",
            "file": None,
        },
    }


@pytest.fixture
def temp_config_file(temp_config_dir: Path, sample_config_data: dict) -> Generator[Path, None, None]:
    """Create a temporary config file with sample data."""
    config_path = temp_config_dir / "config.yaml"
    with config_path.open("w") as f:
        yaml.safe_dump(sample_config_data, f)
    yield config_path


@pytest.fixture
def config_manager(temp_config_file: Path) -> ConfigManager:
    """Create a ConfigManager with a temporary config file."""
    return ConfigManager(temp_config_file)


@pytest.fixture
def runner() -> CliRunner:
    """Create a CLI test runner."""
    return CliRunner()
