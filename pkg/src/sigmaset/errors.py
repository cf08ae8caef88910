"""Exception hierarchy shared by every module of the package."""


class SigmaSetError(Exception):
    """Base class for all errors raised by :mod:`sigmaset`."""


class ParseError(SigmaSetError, ValueError):
    """Malformed set literal or expression text."""

    def __init__(self, message, text=None, pos=None):
        self.text = text
        self.pos = pos
        if text is not None and pos is not None:
            message = f"{message} at column {pos + 1}: {text!r}"
        super().__init__(message)


class DomainError(SigmaSetError, ValueError):
    """An operand lies outside the domain of the requested operation."""


class ProperClassError(DomainError):
    """A collection would hold an atom together with its antielement."""


class NotEntireError(DomainError):
    """The operand has no antiset (it contains zero-natural atoms)."""


class NotFusionableError(DomainError):
    """The equation ``X + M = N`` has ``M ^ N`` non-empty."""


class SizeLimitError(SigmaSetError, ValueError):
    """A size guard was exceeded."""
