"""Logging configuration for skeingen.

Engines log through child loggers of ``skeingen`` and never print.
Verbosity is controlled from the CLI:
- No flag: WARNING only
- -v: INFO level (grid sizes, generator counts, check totals)
- -vv: DEBUG level (every rewrite witness and termination case)
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
ROOT_LOGGER = "skeingen"

_loggers: dict[str, logging.Logger] = {}


def get_log_level(verbosity: int) -> int:
    """Convert a ``-v`` count to a log level."""
    if verbosity <= 0:
        return logging.WARNING
    if verbosity == 1:
        return logging.INFO
    return logging.DEBUG


def configure_logging(
    verbosity: int = 0,
    log_file: str | Path | None = None,
    log_level: str | None = None,
) -> None:
    """Configure the ``skeingen`` logger.

    The stderr handler follows the verbosity (or ``log_level`` when given);
    the optional file handler always records DEBUG.

    Args:
        verbosity: Number of -v flags from the CLI.
        log_file: Optional path to a log file.
        log_level: Explicit level name, overriding ``verbosity``.

    Example:
        >>> configure_logging(verbosity=2)
        >>> configure_logging(log_file="~/.skeingen/logs/skeingen.log")
    """
    if log_level:
        level = getattr(logging, log_level.upper(), logging.WARNING)
    else:
        level = get_log_level(verbosity)

    root_logger = logging.getLogger(ROOT_LOGGER)
    root_logger.setLevel(logging.DEBUG)
    root_logger.handlers.clear()
    root_logger.propagate = False

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT))
    root_logger.addHandler(console_handler)

    if log_file:
        log_path = Path(log_file).expanduser()
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_path)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT))
        root_logger.addHandler(file_handler)


def get_logger(name: str) -> logging.Logger:
    """Get a child logger under the ``skeingen`` namespace.

    Example:
        >>> get_logger("gens").name
        'skeingen.gens'
    """
    full_name = name if name.startswith(f"{ROOT_LOGGER}.") else f"{ROOT_LOGGER}.{name}"
    if full_name not in _loggers:
        _loggers[full_name] = logging.getLogger(full_name)
    return _loggers[full_name]

