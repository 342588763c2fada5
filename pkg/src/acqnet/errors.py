"""Exception hierarchy shared by every acqnet module."""

from __future__ import annotations


class AcqnetError(Exception):
    """Base class for all errors raised by acqnet."""


class GraphError(AcqnetError, ValueError):
    """Invalid graph construction or reference to an unknown vertex."""


class PreconditionError(AcqnetError, ValueError):
    """An operation was called on a graph it is not defined for."""


class CapExceededError(PreconditionError):
    """Input size is above the hard cap of an exhaustive routine."""


class ParseError(AcqnetError, ValueError):
    """Malformed edge-list input."""

    def __init__(self, message: str, lineno: int | None = None, source: str = "<string>"):
        self.lineno = lineno
        self.source = source
        where = f"{source}:{lineno}: " if lineno is not None else f"{source}: "
        super().__init__(where + message)
