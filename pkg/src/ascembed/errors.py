"""Error types shared across the package.

The CLI maps these onto exit statuses: ParseError -> 2, PreconditionError
(including DisconnectedGraphError) -> 1. Budget exhaustion is a result value,
not an exception.
"""


class PreconditionError(ValueError):
    """An operation was called outside its domain (bad order, wrong diameter, ...)."""


class DisconnectedGraphError(PreconditionError):
    """Eccentricity requested on a disconnected graph (infinite eccentricity)."""


class ParseError(ValueError):
    """Malformed graph6 text, edge list, or family spec."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class InternalCheckError(RuntimeError):
    """A construction produced a host that failed its own verification."""
