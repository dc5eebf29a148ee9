"""Tests for the gens CLI command."""

from __future__ import annotations

import json
from pathlib import Path

import yaml
from click.testing import CliRunner

from skeingen.cli.main import cli


def _params(alpha: int, beta: int, gamma: int) -> list[str]:
    return ["--alpha", str(alpha), "--beta", str(beta), "--gamma", str(gamma)]


class TestGensText:
    """Tests for 'skeingen gens' text output."""

    def test_mixed_example(self, runner: CliRunner) -> None:
        """Generators are listed in exponent order."""
        result = runner.invoke(cli, ["gens", *_params(2, -2, 2)])

        assert result.exit_code == 0
        assert "Generators (5): 1, z, z^2, y, x" in result.output
        assert "Candidates: 12" in result.output

    def test_normalization_reported(self, runner: CliRunner) -> None:
        """Non-canonical input shows the moves applied."""
        result = runner.invoke(cli, ["gens", *_params(-3, 5, 7)])

        assert result.exit_code == 0
        assert "M(-3, 5, 7) -> M(7, -3, 5) via rotate" in result.output

    def test_same_sign_boundary(self, runner: CliRunner) -> None:
        """Same-sign runs print the boundary generator."""
        result = runner.invoke(cli, ["gens", *_params(2, 2, 2)])

        assert result.exit_code == 0
        assert "Generators (9)" in result.output
        assert "Boundary: z^2" in result.output

    def test_show_rewrites(self, runner: CliRunner) -> None:
        """The rewrite table names each witness relation."""
        result = runner.invoke(cli, ["gens", *_params(2, -2, 2), "--show-rewrites"])

        assert result.exit_code == 0
        assert "I(2, -1, 0)" in result.output
        assert "generator" in result.output


class TestGensJson:
    """Tests for 'skeingen gens --format json'."""

    def test_json_report(self, runner: CliRunner) -> None:
        """JSON lists generators ascending under the order."""
        result = runner.invoke(cli, ["gens", *_params(2, -2, 2), "--format", "json"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["canonical"] == [2, -2, 2]
        assert data["generators"] == [[0, 0, 0], [0, 0, 1], [0, 1, 0], [1, 0, 0], [0, 0, 2]]
        assert data["boundary"] == []

    def test_deterministic(self, runner: CliRunner) -> None:
        """Two runs give byte-identical JSON whatever the thread count."""
        args = ["gens", *_params(3, -2, 5), "-f", "json"]
        first = runner.invoke(cli, args)
        second = runner.invoke(cli, [*args, "--workers", "4"])

        assert first.exit_code == second.exit_code == 0
        assert first.stdout == second.stdout

    def test_output_file(self, runner: CliRunner, tmp_path: Path) -> None:
        """--output writes the report to a file."""
        target = tmp_path / "reports" / "gens.json"
        result = runner.invoke(cli, ["gens", *_params(3, -2, 3), "-f", "json", "-o", str(target)])

        assert result.exit_code == 0
        data = json.loads(target.read_text())
        assert len(data["generators"]) == 7

    def test_format_from_config(self, runner: CliRunner, temp_config_dir: Path) -> None:
        """The configured output format applies when --format is absent."""
        config_path = temp_config_dir / "config.yaml"
        config_path.write_text(yaml.safe_dump({"defaults": {"output_format": "json"}}))

        result = runner.invoke(cli, ["--config", str(config_path), "gens", *_params(2, -2, 2)])

        assert result.exit_code == 0
        assert json.loads(result.stdout)["canonical"] == [2, -2, 2]


class TestGensErrors:
    """Tests for invalid input to 'skeingen gens'."""

    def test_invalid_parameters(self, runner: CliRunner) -> None:
        """A failing hypothesis exits with status 2 and names it."""
        result = runner.invoke(cli, ["gens", *_params(2, 100, 100)])

        assert result.exit_code == 2
        assert "1/a < 1/b + 1/c" in result.output

    def test_too_small(self, runner: CliRunner) -> None:
        """Coefficients of absolute value one are rejected."""
        result = runner.invoke(cli, ["gens", *_params(1, 2, 3)])

        assert result.exit_code == 2
        assert "a > 1" in result.output

    def test_missing_option(self, runner: CliRunner) -> None:
        """All three coefficients are required."""
        result = runner.invoke(cli, ["gens", "--alpha", "2", "--beta", "2"])

        assert result.exit_code == 2
        assert "--gamma" in result.output
