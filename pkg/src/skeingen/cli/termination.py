"""Termination case-table command for skeingen."""

from __future__ import annotations

from pathlib import Path

import click

from skeingen.cli.context import Context, format_option, output_option, pass_context, surgery_options
from skeingen.core.exceptions import InvalidParametersError
from skeingen.core.gens import check_termination_cases, normalize_params
from skeingen.utils.output import print_error, print_success

EXIT_INVALID_PARAMS = 2


@click.command("termination")
@surgery_options
@click.option(
    "--bound",
    "-b",
    type=click.IntRange(min=0),
    default=None,
    help="Largest exponent checked (default: factor * max(a, b, c)).",
)
@format_option
@output_option
@pass_context
def termination(
    ctx: Context,
    alpha: int,
    beta: int,
    gamma: int,
    bound: int | None,
    fmt: str | None,
    output: Path | None,
) -> None:
    """Check that every monomial outside the region rewrites downward.

    Each out-of-region monomial up to the bound is assigned a relation by
    the case table; the relation must lead with that monomial and a unit
    coefficient, and its right side must be strictly smaller. Exits with
    status 1 on any violation.

    Examples:

        $ skeingen termination --alpha 3 --beta -2 --gamma 5 --bound 12

        $ skeingen termination --alpha 2 --beta 2 --gamma 2 --format json
    """
    try:
        normalization = normalize_params(alpha, beta, gamma)
    except InvalidParametersError as e:
        print_error(str(e))
        raise SystemExit(EXIT_INVALID_PARAMS) from e

    sp = normalization.params
    if bound is None:
        bound = ctx.init_config().config.termination_bound(sp.abc)
    report = check_termination_cases(sp, bound)

    with ctx.formatter(fmt, output) as formatter:
        formatter.print_termination(report)

    if not report.passed:
        print_error(f"{len(report.violations)} monomials do not descend")
        raise SystemExit(1)
    if formatter.format_type == "text" and output is None:
        print_success("every out-of-region monomial rewrites downward")
