"""Utility modules for skeingen.

This package contains shared utilities for logging and output formatting.
"""

from skeingen.utils.logging import configure_logging, get_logger
from skeingen.utils.output import ReportFormatter, console

__all__ = [
    "ReportFormatter",
    "configure_logging",
    "console",
    "get_logger",
]
