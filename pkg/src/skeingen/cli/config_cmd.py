"""Configuration management commands for skeingen.

This module provides CLI commands for viewing and managing
the skeingen configuration file.
"""

from __future__ import annotations

from pathlib import Path

import click
import yaml

from skeingen.cli.context import Context, pass_context
from skeingen.core.config import ConfigManager, get_default_config_path
from skeingen.core.exceptions import ConfigurationError
from skeingen.utils.output import console, dump_json, print_error, print_info, print_success


def _config_path(ctx: Context) -> Path:
    return ctx.config_path or get_default_config_path()


@click.group()
def config() -> None:
    """Manage skeingen configuration.

    Commands for viewing, validating, and initializing the
    configuration file.
    """


@config.command("show")
@click.option(
    "--format",
    "-f",
    "fmt",
    type=click.Choice(["yaml", "json"]),
    default="yaml",
    help="Output format.",
)
@pass_context
def config_show(ctx: Context, fmt: str) -> None:
    """Show the effective configuration.

    Includes defaults and environment overrides for any value the file
    does not set.

    Examples:

        $ skeingen config show

        $ skeingen config show --format json
    """
    try:
        config_manager = ctx.init_config()
    except ConfigurationError as e:
        print_error(str(e))
        raise SystemExit(1) from e
    data = config_manager.to_dict()

    if fmt == "json":
        click.echo(dump_json(data))
    else:
        click.echo(yaml.safe_dump(data, default_flow_style=False, sort_keys=False), nl=False)
        console.print(f"\n[dim]Config file: {config_manager.path}[/dim]")


@config.command("validate")
@pass_context
def config_validate(ctx: Context) -> None:
    """Validate the configuration file.

    Examples:

        $ skeingen config validate
    """
    config_path = _config_path(ctx)

    if not config_path.exists():
        print_error(f"Configuration file not found: {config_path}")
        print_info("Run 'skeingen config init' to create a default config.")
        raise SystemExit(1)

    try:
        defaults = ConfigManager(config_path).config.defaults
    except ConfigurationError as e:
        print_error(f"Invalid configuration: {e}")
        raise SystemExit(1) from e

    print_success(f"Configuration is valid: {config_path}")
    console.print(f"  Max twist: {defaults.max_twist}")
    console.print(f"  Additivity bound: {defaults.additivity_bound}")
    console.print(f"  Termination bound factor: {defaults.termination_bound_factor}")
    console.print(f"  Workers: {defaults.workers}")
    console.print(f"  Output format: {defaults.output_format}")


@config.command("init")
@click.option(
    "--force",
    is_flag=True,
    help="Overwrite existing configuration.",
)
@pass_context
def config_init(ctx: Context, force: bool) -> None:
    """Create a default configuration file.

    Examples:

        $ skeingen config init

        $ skeingen config init --force
    """
    config_path = _config_path(ctx)

    if config_path.exists() and not force:
        print_error(f"Configuration already exists: {config_path}")
        print_info("Use --force to overwrite.")
        raise SystemExit(1)

    try:
        path = ConfigManager.create_example_config(config_path)
    except OSError as e:
        print_error(f"Failed to create configuration: {e}")
        raise SystemExit(1) from e
    print_success(f"Created configuration at: {path}")


@config.command("path")
@pass_context
def config_path(ctx: Context) -> None:
    """Show the configuration file path.

    Examples:

        $ skeingen config path
    """
    path = _config_path(ctx)
    click.echo(str(path))

    if path.exists():
        console.print("[dim](file exists)[/dim]")
    else:
        console.print("[dim](file does not exist)[/dim]")
