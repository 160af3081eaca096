"""Exception types shared across the package.

Every domain error raised by curvecal derives from :class:`CurvecalError`,
so callers (and the CLI) can distinguish bad input from programming bugs.
"""


class CurvecalError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidGenusError(CurvecalError):
    """The ambient genus must be a positive integer."""


class WordSyntaxError(CurvecalError):
    """A word string does not match the token grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class IndexOutOfGenusError(CurvecalError):
    """A letter index exceeds the ambient genus (or is below 1)."""


class ZeroExponentError(CurvecalError):
    """An explicit exponent of zero is not a valid token."""


class ExponentLimitError(CurvecalError):
    """An exponent magnitude exceeds the configured overflow limit."""


class GenusMismatchError(CurvecalError):
    """Two values that must share a genus do not."""


class InputFormatError(CurvecalError):
    """A structured payload (candidate, matrix, file, JSON) is malformed."""


class DiagramError(CurvecalError):
    """A crossing diagram is invalid or an operation precondition failed."""


class ChainError(CurvecalError):
    """A cobordism chain is invalid or a rewriting move is illegal."""
