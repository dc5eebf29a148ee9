"""Rich terminal output utilities for skeingen.

Reports render either as rich text (tables and status lines) or as JSON.
JSON goes through ``json.dumps`` straight to the target stream so that two
identical runs produce byte-identical output.
"""

from __future__ import annotations

import json
from enum import StrEnum
from typing import IO, TYPE_CHECKING, Any

import click
from rich.console import Console
from rich.markup import escape
from rich.table import Table
from rich.text import Text

if TYPE_CHECKING:
    from collections.abc import Mapping

    from skeingen.models.character import CharvarReport
    from skeingen.models.reports import GeneratingSetReport, LemmaReport, TerminationReport

console = Console()
error_console = Console(stderr=True)


class OutputFormat(StrEnum):
    """Supported output formats."""

    TEXT = "text"
    JSON = "json"


def dump_json(data: Any) -> str:
    """Deterministic JSON text for a report dictionary."""
    return json.dumps(data, indent=2, ensure_ascii=False)


def _status(ok: bool) -> Text:
    return Text("✓ pass", style="green") if ok else Text("✗ FAIL", style="red")


class ReportFormatter:
    """Renders skeingen reports as text or JSON.

    Args:
        format_type: Output format to use.
        stream: Optional file to write to instead of stdout.

    Example:
        >>> formatter = ReportFormatter(OutputFormat.JSON)
        >>> formatter.print_generating_set(report)
    """

    def __init__(self, format_type: OutputFormat = OutputFormat.TEXT, stream: IO[str] | None = None) -> None:
        self.format_type = format_type
        self.stream = stream
        self.console = Console(file=stream, width=120) if stream is not None else console

    def emit_json(self, data: Any) -> None:
        click.echo(dump_json(data), file=self.stream)

    def _line(self, text: str, style: str | None = None) -> None:
        self.console.print(text, style=style, markup=False, highlight=False, soft_wrap=True)

    # Generating sets

    def print_generating_set(self, report: GeneratingSetReport, show_rewrites: bool = False) -> None:
        """Print a generating set.

        Args:
            report: The computed report.
            show_rewrites: Also tabulate every candidate and its witness.
        """
        if self.format_type == OutputFormat.JSON:
            self.emit_json(report.to_dict())
            return

        norm = report.normalization
        source = "M({}, {}, {})".format(*norm.source)
        if norm.moves:
            self._line(f"{source} -> {report.params} via {', '.join(norm.moves)}")
        else:
            self._line(str(report.params))
        self._line(f"Candidates: {len(report.candidates)}")
        generators = ", ".join(str(m) for m in report.generators_by_exponent)
        self._line(f"Generators ({len(report.generators)}): {generators}", style="bold")
        if report.boundary:
            self._line(f"Boundary: {', '.join(str(m) for m in report.boundary)}")

        if show_rewrites:
            table = Table(title="Candidates", show_header=True)
            table.add_column("Monomial", style="cyan", no_wrap=True)
            table.add_column("Status")
            table.add_column("Relation", style="yellow")
            table.add_column("Right term", style="dim")
            for m in report.candidates:
                witness = report.rewrites.get(m)
                if witness is None:
                    table.add_row(str(m), Text("generator", style="green"), "-", "-")
                else:
                    table.add_row(str(m), witness.source, str(witness.relation), str(witness.right))
            self.console.print(table)

    # Twist lemmas

    def print_lemma_report(self, report: LemmaReport, dumps: Mapping[str, str] | None = None) -> None:
        """Print twist-lemma checks and optional expansion dumps."""
        if self.format_type == OutputFormat.JSON:
            data = report.to_dict()
            if dumps:
                data["expansions"] = dict(dumps)
            self.emit_json(data)
            return

        for title, body in (dumps or {}).items():
            self._line(f"{title}:", style="bold")
            self._line(body)
        total = len(report.checks)
        self._line(
            f"{report.passed_count}/{total} twist checks passed "
            f"(max twist {report.max_twist}, additivity bound {report.additivity_bound})"
        )
        if report.failures:
            table = Table(title="Failures", show_header=True)
            table.add_column("Check", style="cyan")
            table.add_column("Detail", style="red")
            for check in report.failures:
                table.add_row(check.name, check.detail)
            self.console.print(table)

    # Termination

    def print_termination(self, report: TerminationReport) -> None:
        if self.format_type == OutputFormat.JSON:
            self.emit_json(report.to_dict())
            return

        self._line(
            f"{report.params}: {report.outside} monomials outside the region "
            f"(of {report.checked} with exponents <= {report.bound})"
        )
        table = Table(title="Cases", show_header=True)
        table.add_column("Case", style="cyan")
        table.add_column("Monomials", justify="right")
        for case, count in sorted(report.case_counts.items()):
            table.add_row(case, str(count))
        self.console.print(table)
        self._line(f"Longest reduction chain: {report.longest_chain}")
        if report.boundary:
            self._line(f"Boundary generators: {', '.join(str(m) for m in report.boundary)}")
        for v in report.violations:
            self._line(f"case {v.case} at {v.monomial}: {v.reason}", style="red")

    # Character variety

    def print_charvar(self, report: CharvarReport) -> None:
        if self.format_type == OutputFormat.JSON:
            self.emit_json(report.to_dict())
            return

        from skeingen.models.character import CLASS_WORDS

        reps = Table(title="Representations", show_header=True)
        reps.add_column("Name", style="cyan")
        reps.add_column("det = 1")
        reps.add_column("R^5 = S^3 = (RS)^2, square I")
        for r in report.representations:
            reps.add_row(r.name, _status(r.unimodular), _status(r.group_relations))
        self.console.print(reps)

        table = Table(title="Character table", show_header=True)
        table.add_column("", style="cyan")
        for word in CLASS_WORDS:
            table.add_column(f"tau_{word}", justify="right")
        for name, values in report.table.rows.items():
            table.add_row(name, *(str(v) for v in values))
        self.console.print(table)
        self._line(f"Matches published table: {'yes' if report.matches_expected else 'NO'}")

        for result in report.relations:
            mark = "✓" if result.holds else "✗"
            self._line(f"{mark} {result.relation} at {result.character}")
        self._line(f"Independence determinant: {report.determinant}")


def print_success(message: str) -> None:
    """Print a success message."""
    console.print(f"[green]✓[/green] {escape(message)}")


def print_error(message: str) -> None:
    """Print an error message to stderr."""
    error_console.print(f"[red]✗[/red] {escape(message)}")


def print_info(message: str) -> None:
    """Print an info message."""
    console.print(f"[blue]ℹ[/blue] {escape(message)}")
