"""Exception types shared across the package.

Everything raised on purpose derives from InktokError, so callers can catch
one type at a boundary (the CLI does exactly that).
"""


class InktokError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInk(InktokError):
    """Ink data violates a structural rule (empty stroke, bad shape, NaN)."""


class Overflow(InktokError):
    """A coordinate left the signed 32-bit range."""


class InvalidParams(InktokError):
    """Numeric parameters out of range (delta, window, polyorder, ...)."""


class InvalidToken(InktokError):
    """A token id or symbol is not valid under the active vocabulary."""


class BudgetExhausted(InktokError):
    """A vocabulary budget is smaller than the base alphabet it must hold."""


class ParseError(InktokError):
    """A file could not be parsed; the message names the offending location."""


class ConfigMismatch(InktokError):
    """Two artifacts built under different settings were combined."""


class EmptyInk(InktokError):
    """An operation that needs at least one stroke received none."""
