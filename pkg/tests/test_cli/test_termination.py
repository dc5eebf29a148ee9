"""Tests for the termination CLI command."""

from __future__ import annotations

import json

from click.testing import CliRunner
from pytest_mock import MockerFixture

from skeingen.cli.main import cli
from skeingen.core.relations import TYPE_I
from skeingen.models.monomial import Monomial, RelationParams, SurgeryParams
from skeingen.models.reports import CaseViolation, TerminationReport


def _params(alpha: int, beta: int, gamma: int) -> list[str]:
    return ["--alpha", str(alpha), "--beta", str(beta), "--gamma", str(gamma)]


class TestTermination:
    """Tests for 'skeingen termination'."""

    def test_text_success(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["termination", *_params(2, -2, 2), "--bound", "6"])

        assert result.exit_code == 0
        assert "monomials outside the region" in result.output
        assert "every out-of-region monomial rewrites downward" in result.output

    def test_json(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["termination", *_params(3, -2, 5), "-b", "5", "-f", "json"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["passed"] is True
        assert data["checked"] == 6**3
        assert data["violations"] == []

    def test_default_bound(self, runner: CliRunner) -> None:
        """Without --bound the configured factor times max(a, b, c) is used."""
        result = runner.invoke(cli, ["termination", *_params(2, 2, 2), "-f", "json"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["bound"] == 8
        assert data["boundary"] == [[0, 0, 2]]

    def test_normalizes_first(self, runner: CliRunner) -> None:
        """Non-canonical input is checked in canonical form."""
        result = runner.invoke(cli, ["termination", *_params(-3, 2, -5), "-b", "3", "-f", "json"])

        assert result.exit_code == 0
        assert json.loads(result.stdout)["params"] == [3, -2, 5]

    def test_invalid_parameters(self, runner: CliRunner) -> None:
        result = runner.invoke(cli, ["termination", *_params(2, 100, 100)])

        assert result.exit_code == 2
        assert "1/a < 1/b + 1/c" in result.output

    def test_violation_exit_code(self, runner: CliRunner, mocker: MockerFixture) -> None:
        """Any violation exits with status 1 and is listed."""
        sp = SurgeryParams.of(2, -2, 2)
        violation = CaseViolation(
            monomial=Monomial(2, 0, 0),
            case="1",
            relation=RelationParams.of(TYPE_I, 2, 0, 0),
            reason="right term x^2 is not smaller",
        )
        report = TerminationReport(
            params=sp,
            bound=2,
            checked=27,
            outside=15,
            case_counts={"1": 15},
            violations=(violation,),
            longest_chain=1,
        )
        mocker.patch("skeingen.cli.termination.check_termination_cases", return_value=report)

        result = runner.invoke(cli, ["termination", *_params(2, -2, 2), "-b", "2"])

        assert result.exit_code == 1
        assert "case 1 at x^2" in result.output
        assert "1 monomials do not descend" in result.output
