"""Generating-set command for skeingen."""

from __future__ import annotations

from pathlib import Path

import click

from skeingen.cli.context import Context, format_option, output_option, pass_context, surgery_options
from skeingen.core.exceptions import InvalidParametersError, VerificationError
from skeingen.core.gens import generating_set, normalize_params
from skeingen.utils.logging import get_logger
from skeingen.utils.output import print_error

logger = get_logger("cli.gens")

EXIT_INVALID_PARAMS = 2


@click.command("gens")
@surgery_options
@format_option
@output_option
@click.option(
    "--workers",
    "-w",
    type=click.IntRange(1, 64),
    default=None,
    help="Threads for the candidate scan (default: from config).",
)
@click.option(
    "--show-rewrites",
    is_flag=True,
    default=False,
    help="Tabulate every candidate with the relation that rewrites it.",
)
@pass_context
def gens(
    ctx: Context,
    alpha: int,
    beta: int,
    gamma: int,
    fmt: str | None,
    output: Path | None,
    workers: int | None,
    show_rewrites: bool,
) -> None:
    """Compute a finite generating set of the skein module.

    The surgery triple is first brought to canonical sign form by global
    negation and cyclic rotation.

    Examples:

        $ skeingen gens --alpha 2 --beta -2 --gamma 2

        $ skeingen gens --alpha 3 --beta -2 --gamma 5 --format json

        $ skeingen gens --alpha 2 --beta 2 --gamma 2 --show-rewrites
    """
    try:
        normalization = normalize_params(alpha, beta, gamma)
    except InvalidParametersError as e:
        print_error(str(e))
        raise SystemExit(EXIT_INVALID_PARAMS) from e

    workers = workers or ctx.init_config().defaults.workers
    try:
        report = generating_set(normalization.params, workers=workers, normalization=normalization)
    except VerificationError as e:
        print_error(str(e))
        raise SystemExit(1) from e

    logger.debug(f"writing report for {report.params}")
    with ctx.formatter(fmt, output) as formatter:
        formatter.print_generating_set(report, show_rewrites=show_rewrites)
