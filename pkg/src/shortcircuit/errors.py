"""Exception types shared across the package.

The CLI maps these onto exit codes: ParseError -> 2, DomainError -> 3,
ResourceCapError -> 4.
"""

from __future__ import annotations


class ShortCircuitError(Exception):
    """Base class for all package errors."""


class ParseError(ShortCircuitError, ValueError):
    """Malformed textual input (braid word, gauss code, pairing spec)."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DomainError(ShortCircuitError, ValueError):
    """Input outside an operation's domain (non-pure word, even strand count, ...)."""


class ResourceCapError(ShortCircuitError, RuntimeError):
    """A configured size cap (word length, crossing count) was exceeded."""
