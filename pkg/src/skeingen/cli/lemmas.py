"""Twist-lemma verification command for skeingen."""

from __future__ import annotations

from pathlib import Path

import click

from skeingen.cli.context import Context, format_option, output_option, pass_context
from skeingen.core.twist import (
    check_twist_lemmas,
    expand_closed_twist,
    expand_double_twist,
    expand_open_twist,
)
from skeingen.utils.output import print_error


def _nonzero(_ctx: click.Context, _param: click.Parameter, value: int | None) -> int | None:
    if value == 0:
        raise click.BadParameter("twist count must be nonzero")
    return value


def expansion_dumps(n: int) -> dict[str, str]:
    """Debug dumps of every expansion family for twist count ``n``."""
    return {
        f"open twist {n}": expand_open_twist(n).dump(),
        f"closed twist {n}": expand_closed_twist(n).dump(),
        f"double twist ({n}, {n})": expand_double_twist(n, n).dump(),
        f"double twist ({n}, {-n})": expand_double_twist(n, -n).dump(),
    }


@click.command("lemmas")
@click.option(
    "--max-twist",
    "-n",
    type=click.IntRange(1, 32),
    default=None,
    help="Largest twist count to check (default: from config, else 8).",
)
@click.option(
    "--additivity-bound",
    type=click.IntRange(0, 16),
    default=None,
    help="Largest |m|, |n| for twist additivity (default: from config, else 4).",
)
@click.option(
    "--show",
    type=int,
    default=None,
    callback=_nonzero,
    help="Also dump the expansions for this twist count.",
)
@format_option
@output_option
@pass_context
def lemmas(
    ctx: Context,
    max_twist: int | None,
    additivity_bound: int | None,
    show: int | None,
    fmt: str | None,
    output: Path | None,
) -> None:
    """Verify the twist expansions.

    Checks extreme coefficients and supports of the open, closed and
    double twist expansions, their mirror symmetry, and additivity of
    open twists. Exits with status 1 if any check fails.

    Examples:

        $ skeingen lemmas

        $ skeingen lemmas --max-twist 4 --show 3
    """
    defaults = ctx.init_config().defaults
    report = check_twist_lemmas(
        max_twist=max_twist or defaults.max_twist,
        additivity_bound=defaults.additivity_bound if additivity_bound is None else additivity_bound,
    )
    dumps = expansion_dumps(show) if show is not None else None

    with ctx.formatter(fmt, output) as formatter:
        formatter.print_lemma_report(report, dumps)

    if not report.passed:
        print_error(f"{len(report.failures)} twist checks failed")
        raise SystemExit(1)
