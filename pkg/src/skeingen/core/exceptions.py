"""Custom exceptions for skeingen.

This module defines a hierarchy of exceptions used throughout skeingen
so the CLI can map failures to meaningful messages and exit codes.

Exception Hierarchy:
    SkeinError (base)
    ├── ConfigurationError
    ├── InvalidParametersError
    ├── TwistError
    ├── RelationError
    ├── CyclotomicDivisionError
    └── VerificationError
"""

from __future__ import annotations

from typing import Any


class SkeinError(Exception):
    """Base exception for all skeingen errors.

    Args:
        message: Human-readable error message.
        details: Optional dictionary with additional error context.

    Attributes:
        message: The error message.
        details: Additional context about the error.
    """

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        if self.details:
            detail_str = ", ".join(f"{k}={v}" for k, v in self.details.items())
            return f"{self.message} ({detail_str})"
        return self.message


class ConfigurationError(SkeinError):
    """Raised when there is a configuration-related error.

    Examples:
        - Invalid YAML syntax in config file
        - Invalid configuration values
    """


class InvalidParametersError(SkeinError):
    """Raised when surgery coefficients violate the finiteness hypotheses.

    Deliberately not a ``ValueError`` so pydantic validators let it through
    unchanged.

    Args:
        params: The offending ``(alpha, beta, gamma)`` triple.
        violated: The failing hypothesis, e.g. ``"1/a < 1/b + 1/c"``.
    """

    def __init__(self, params: tuple[int, int, int], violated: str) -> None:
        super().__init__(
            f"{violated} fails",
            details={"params": params},
        )
        self.params = params
        self.violated = violated


class TwistError(SkeinError):
    """Raised when a twist expansion is requested for a degenerate count.

    Args:
        message: Description of the problem.
        twists: The offending twist counts.
    """

    def __init__(self, message: str, twists: tuple[int, ...]) -> None:
        super().__init__(message, details={"twists": twists})
        self.twists = twists


class RelationError(SkeinError):
    """Raised when a Type I/II relation has no unit-leading analysis.

    Examples:
        - Type I with r = s = 0
        - Type II with s = t = 0
        - A negative count of parallel loops in a full expansion
    """


class CyclotomicDivisionError(SkeinError, ZeroDivisionError):
    """Raised when inverting zero in Q(zeta_5)."""

    def __init__(self) -> None:
        super().__init__("division by zero in Q(zeta_5)")


class VerificationError(SkeinError):
    """Raised when an internal consistency check fails.

    Args:
        check: Name of the check that failed.
        message: Description of the failure.
    """

    def __init__(self, check: str, message: str) -> None:
        super().__init__(f"{check}: {message}", details={"check": check})
        self.check = check
