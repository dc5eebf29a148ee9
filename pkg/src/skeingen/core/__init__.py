"""Core functionality for skeingen.

The computational engines live in submodules (``ordering``, ``twist``,
``relations``, ``gens``, ``charvar``); this package exports only the
configuration layer and the exception hierarchy so it can be imported
from anywhere without cycles.
"""

from skeingen.core.config import Config, ConfigManager
from skeingen.core.exceptions import (
    ConfigurationError,
    CyclotomicDivisionError,
    InvalidParametersError,
    RelationError,
    SkeinError,
    TwistError,
    VerificationError,
)

__all__ = [
    "Config",
    "ConfigManager",
    "ConfigurationError",
    "CyclotomicDivisionError",
    "InvalidParametersError",
    "RelationError",
    "SkeinError",
    "TwistError",
    "VerificationError",
]
