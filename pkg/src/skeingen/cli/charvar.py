"""Character-variety command for skeingen."""

from __future__ import annotations

from pathlib import Path

import click

from skeingen.cli.context import Context, format_option, output_option, pass_context
from skeingen.core.charvar import run_charvar_suite
from skeingen.utils.output import print_error


@click.command("charvar")
@format_option
@output_option
@pass_context
def charvar(ctx: Context, fmt: str | None, output: Path | None) -> None:
    """Verify the binary icosahedral character data over Q(zeta_5).

    Checks the three representations, rebuilds the character table and
    compares it with the published one, evaluates the six trace relations
    and the independence determinant. Exits with status 1 on any failure.

    Examples:

        $ skeingen charvar

        $ skeingen charvar --format json
    """
    report = run_charvar_suite()

    with ctx.formatter(fmt, output) as formatter:
        formatter.print_charvar(report)

    if not report.passed:
        print_error("character-variety checks failed")
        raise SystemExit(1)
