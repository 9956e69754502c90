"""Error taxonomy shared by the library and the CLI."""

from typing import Optional


class FreeTuplesError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(FreeTuplesError, ValueError):
    """An argument is malformed, out of range or of the wrong shape."""


class PreconditionError(FreeTuplesError, ValueError):
    """A documented precondition of an operation does not hold."""


class NotInvertibleError(FreeTuplesError, ArithmeticError):
    """A series or moment sequence has no inverse for the requested operation."""


class TruncationExceededError(FreeTuplesError):
    """A coefficient beyond the available truncation degree was requested.

    Attributes:
        needed: The degree that would have been required.
        available: The max_degree actually available.
        word: The word whose coefficient was requested, when known.
    """

    def __init__(self, needed: int, available: int, word: Optional[tuple[int, ...]] = None):
        self.needed = needed
        self.available = available
        self.word = word
        where = f" for word {','.join(map(str, word))}" if word else ""
        super().__init__(
            f"degree {needed} needed{where}, but only max_degree={available} is available"
        )
