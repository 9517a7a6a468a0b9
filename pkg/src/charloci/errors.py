"""Shared exception types.

Two broad classes matter for the command line: mathematical rejections
(exit code 1) and usage/grammar problems (exit code 2).
"""


class CharlociError(Exception):
    pass


class MathDomainError(CharlociError):
    """A well-formed request that the mathematics refuses."""


class CharacterError(MathDomainError):
    """Generator images that do not define a character (zero image or a
    violated relator)."""


class UnsupportedFieldError(MathDomainError):
    """Operation not available over the given field (outside the tower,
    or past a documented desk-scale boundary)."""


class BudgetExceededError(MathDomainError):
    """An enumeration would exceed its explicit budget."""


class ParseError(CharlociError):
    """Syntax error in a presentation file, descriptor or expression."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", col {col}" if col is not None else "")
        super().__init__(message + where)
