"""Exception hierarchy shared by every module of the package."""


class ScrollHankelError(Exception):
    """Base class for all errors raised by scrollhankel."""


class MalformedFacets(ScrollHankelError, ValueError):
    pass


class NotClosed(ScrollHankelError, ValueError):
    """Raised when an edge set violates closedness for its labeling.

    ``witness`` is a triple ``(i, k, j)`` with ``{i, j}`` an edge and
    ``i < k < j`` while ``{i, k}`` or ``{k, j}`` is missing.
    """

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class DegenerateInput(ScrollHankelError, ValueError):
    pass


class RingMismatch(ScrollHankelError, ValueError):
    pass


class IndexOutOfRange(ScrollHankelError, IndexError):
    pass


class ZeroIdeal(ScrollHankelError, ValueError):
    pass


class NotProper(ScrollHankelError, ValueError):
    pass


class CapExceeded(ScrollHankelError, RuntimeError):
    pass


class IncompleteTable(ScrollHankelError, ValueError):
    pass


class ParseError(ScrollHankelError, ValueError):
    """Raised by the text parsers; ``position`` is a 0-based column."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
