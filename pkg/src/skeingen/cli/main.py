"""Main CLI entry point for skeingen.

This module defines the main CLI group and global options that are
shared across all commands.
"""

from __future__ import annotations

import os
import sys
from pathlib import Path

import click
from rich.console import Console

from skeingen import __version__
from skeingen.cli.context import Context, pass_context
from skeingen.core.config import get_default_config_path
from skeingen.core.exceptions import ConfigurationError, InvalidParametersError, SkeinError
from skeingen.utils.logging import configure_logging
from skeingen.utils.output import error_console, print_error


def version_callback(ctx: click.Context, _param: click.Parameter, value: bool) -> None:
    """Print version and exit."""
    if not value or ctx.resilient_parsing:
        return
    console = Console()
    console.print(f"skeingen version [cyan]{__version__}[/cyan]")
    ctx.exit()


@click.group()
@click.option(
    "-v",
    "--verbose",
    count=True,
    help="Increase verbosity (-v for summaries, -vv for every rewrite).",
)
@click.option(
    "--debug",
    is_flag=True,
    default=False,
    help="Show full error tracebacks.",
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False),
    envvar="SKEINGEN_CONFIG",
    help=f"Path to config file (default: {get_default_config_path()}).",
)
@click.option(
    "--version",
    is_flag=True,
    callback=version_callback,
    expose_value=False,
    is_eager=True,
    help="Show version and exit.",
)
@pass_context
def cli(
    ctx: Context,
    verbose: int,
    debug: bool,
    config_path: str | None,
) -> None:
    """skeingen - Exact computations in Kauffman bracket skein modules.

    Computes finite generating sets for the skein modules of the surgery
    manifolds M(alpha, beta, gamma) and verifies the algebra behind them.
    Exit status is 0 when everything verifies, 1 on a failed check and 2
    on invalid parameters.

    Examples:

        # Generating set of M(2, -2, 2)

        $ skeingen gens --alpha 2 --beta -2 --gamma 2

        # Verify twist expansions up to 8 twists

        $ skeingen lemmas --max-twist 8

        # Check the rewrite case table

        $ skeingen termination --alpha 3 --beta -2 --gamma 5 --bound 12

        # Character data of the binary icosahedral group

        $ skeingen charvar --format json
    """
    ctx.verbose = verbose
    ctx.debug = debug
    if config_path:
        ctx.config_path = Path(config_path).expanduser()

    log_level: str | None = None
    log_file: str | None = None
    try:
        settings = ctx.init_config().config
        log_file = settings.logging.file
        if not verbose:
            log_level = settings.logging.level
    except ConfigurationError:
        # Reported by the command that needs the config.
        ctx.config = None
    configure_logging(verbosity=verbose, log_file=log_file, log_level=log_level)


# Import subcommands after cli is defined to avoid circular imports
from skeingen.cli.charvar import charvar  # noqa: E402
from skeingen.cli.config_cmd import config  # noqa: E402
from skeingen.cli.gens import gens  # noqa: E402
from skeingen.cli.lemmas import lemmas  # noqa: E402
from skeingen.cli.termination import termination  # noqa: E402

cli.add_command(gens)
cli.add_command(lemmas)
cli.add_command(termination)
cli.add_command(charvar)
cli.add_command(config)


def main() -> None:
    """Main entry point with error handling."""
    try:
        cli(standalone_mode=False)
    except click.ClickException as e:
        e.show()
        sys.exit(e.exit_code)
    except click.Abort:
        error_console.print("\n[dim]Aborted[/dim]")
        sys.exit(1)
    except InvalidParametersError as e:
        print_error(str(e))
        sys.exit(2)
    except SkeinError as e:
        print_error(str(e))
        sys.exit(1)
    except KeyboardInterrupt:
        error_console.print("\n[dim]Interrupted[/dim]")
        sys.exit(130)
    except Exception as e:
        if os.environ.get("SKEINGEN_DEBUG") or "--debug" in sys.argv:
            import traceback

            traceback.print_exc()
        else:
            print_error(f"Unexpected error: {e}")
            error_console.print("[dim]Use --debug for full traceback[/dim]")
        sys.exit(1)


if __name__ == "__main__":
    main()
