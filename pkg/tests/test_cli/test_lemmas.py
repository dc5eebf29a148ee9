"""Tests for the lemmas CLI command."""

from __future__ import annotations

import json
from pathlib import Path

from click.testing import CliRunner
from pytest_mock import MockerFixture

from skeingen.cli.main import cli
from skeingen.models.reports import LemmaCheck, LemmaReport


class TestLemmas:
    """Tests for 'skeingen lemmas'."""

    def test_text_summary(self, runner: CliRunner) -> None:
        """Every check passes for small bounds."""
        result = runner.invoke(cli, ["lemmas", "--max-twist", "3", "--additivity-bound", "2"])

        assert result.exit_code == 0
        assert "127/127 twist checks passed (max twist 3, additivity bound 2)" in result.output

    def test_json_summary(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["lemmas", "-n", "1", "--additivity-bound", "0", "-f", "json"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["total"] == data["passed"] == 19
        assert data["failures"] == []

    def test_show_expansions(self, runner: CliRunner) -> None:
        """--show adds expansion dumps for one twist count."""
        result = runner.invoke(
            cli, ["lemmas", "-n", "2", "--additivity-bound", "1", "--show", "2", "-f", "json"]
        )

        assert result.exit_code == 0
        expansions = json.loads(result.stdout)["expansions"]
        assert expansions["open twist 2"] == "pass(1) : A\nclasp(0) : -A^2"
        assert set(expansions) == {
            "open twist 2",
            "closed twist 2",
            "double twist (2, 2)",
            "double twist (2, -2)",
        }

    def test_show_zero_rejected(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["lemmas", "--show", "0"])

        assert result.exit_code == 2
        assert "nonzero" in result.output

    def test_defaults_from_config(self, runner: CliRunner, temp_config_file: Path) -> None:
        """Bounds default to the configured values."""
        result = runner.invoke(cli, ["--config", str(temp_config_file), "lemmas", "-f", "json"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["max_twist"] == 4
        assert data["additivity_bound"] == 2
        assert data["total"] == 4 * 10 + 16 * 8 + 25

    def test_failure_exit_code(self, runner: CliRunner, mocker: MockerFixture) -> None:
        """A failed check exits with status 1."""
        report = LemmaReport(
            max_twist=1,
            additivity_bound=0,
            checks=[LemmaCheck(name="open(1) top", passed=False, detail="A^2")],
        )
        mocker.patch("skeingen.cli.lemmas.check_twist_lemmas", return_value=report)

        result = runner.invoke(cli, ["lemmas"])

        assert result.exit_code == 1
        assert "0/1 twist checks passed" in result.output
        assert "1 twist checks failed" in result.output
