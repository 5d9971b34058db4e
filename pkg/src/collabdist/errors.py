"""Exception hierarchy shared by every collabdist module."""

from __future__ import annotations


class CollabDistError(Exception):
    """Base class. ``lineno`` is set when the error comes from a parsed file."""

    def __init__(self, message: str, lineno: int | None = None) -> None:
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class SelfEdge(CollabDistError, ValueError):
    pass


class NonPositiveCount(CollabDistError, ValueError):
    pass


class UnknownNode(CollabDistError, LookupError):
    pass


class ArithmeticOverflow(CollabDistError, OverflowError):
    pass


class LimitExceeded(CollabDistError, RuntimeError):
    pass


class InvalidFact(CollabDistError, ValueError):
    pass


class InconsistentFact(CollabDistError, ValueError):
    pass


class UnknownAuthor(CollabDistError, LookupError):
    pass


class MissingLink(CollabDistError, LookupError):
    pass


class MalformedLine(CollabDistError, ValueError):
    pass


class EmptyAuthorList(MalformedLine):
    pass
