"""Error types shared across the package.

Every domain error derives from :class:`ProxigraphError` and carries a stable
``name`` used by the CLI (exit-code messages) and the HTTP service (error
envelopes).
"""

from __future__ import annotations


class ProxigraphError(Exception):
    """Base class for all domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class DuplicatePoints(ProxigraphError):
    """Two input points share the same coordinates."""


class TooFewPoints(ProxigraphError):
    """The operation needs more points than the input provides."""


class TooManyPoints(ProxigraphError):
    """The input exceeds the per-request point cap."""


class KOutOfRange(ProxigraphError):
    """Neighbor count or cluster count k is outside its valid range."""


class NonpositiveEpsilon(ProxigraphError):
    """A radius parameter must be strictly positive."""


class BadSectorCount(ProxigraphError):
    """Sector count must be a positive integer."""


class TargetOutOfRange(ProxigraphError):
    """Requested cluster count is outside 1..n."""


class ParseError(ProxigraphError):
    """Input bytes could not be parsed; carries a human-readable location."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(message if location is None else f"{location}: {message}")


class EmptyInput(ProxigraphError):
    """The input parsed but contained no points."""


class UnknownAlgorithm(ProxigraphError):
    """Algorithm identifier is not in the catalog."""


class MissingParameter(ProxigraphError):
    """A required algorithm parameter was not supplied."""


class BadParameter(ProxigraphError):
    """A parameter has the wrong type or an out-of-domain value."""
