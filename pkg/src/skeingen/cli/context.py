"""CLI context for skeingen.

This module defines the shared context object passed to all CLI commands,
extracted to avoid circular imports.
"""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import TYPE_CHECKING

import click

if TYPE_CHECKING:
    from skeingen.core.config import ConfigManager
    from skeingen.utils.output import ReportFormatter


class Context:
    """CLI context object passed to all commands.

    Attributes:
        config: ConfigManager instance, created on first use.
        config_path: Explicit ``--config`` path, if any.
        verbose: Verbosity level.
        debug: Whether to show debug tracebacks.
    """

    def __init__(self) -> None:
        self.config: ConfigManager | None = None
        self.config_path: Path | None = None
        self.verbose: int = 0
        self.debug: bool = False

    def init_config(self) -> ConfigManager:
        """Initialize configuration manager.

        Raises:
            ConfigurationError: If the config file is invalid.
        """
        from skeingen.core.config import ConfigManager

        if self.config is None:
            self.config = ConfigManager(self.config_path)
        return self.config

    def output_format(self, fmt: str | None) -> str:
        """``fmt`` when given on the command line, else the configured default."""
        return fmt or self.init_config().defaults.output_format

    @contextmanager
    def formatter(self, fmt: str | None, output: Path | None) -> Iterator[ReportFormatter]:
        """Formatter writing to ``output`` (or stdout) in the resolved format."""
        from skeingen.utils.output import OutputFormat, ReportFormatter

        format_type = OutputFormat(self.output_format(fmt))
        if output is None:
            yield ReportFormatter(format_type)
            return
        output.parent.mkdir(parents=True, exist_ok=True)
        with output.open("w", encoding="utf-8") as stream:
            yield ReportFormatter(format_type, stream)


pass_context = click.make_pass_decorator(Context, ensure=True)

format_option = click.option(
    "--format",
    "-f",
    "fmt",
    type=click.Choice(["text", "json"]),
    default=None,
    help="Output format (default: from config, else text).",
)

output_option = click.option(
    "--output",
    "-o",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the report to a file instead of stdout.",
)


def surgery_options(func: click.decorators.FC) -> click.decorators.FC:
    """Attach the required ``--alpha/--beta/--gamma`` options."""
    for name in ("gamma", "beta", "alpha"):
        func = click.option(
            f"--{name}",
            type=int,
            required=True,
            help=f"Surgery coefficient {name} (may be negative).",
        )(func)
    return func
