"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end:
1 for malformed input, 2 for mathematical domain violations, 3 for
requests outside the supported scope.
"""

from __future__ import annotations


class BiquadError(Exception):
    exit_code = 2


# -- parse errors (exit 1) --------------------------------------------------

class ParseError(BiquadError, ValueError):
    """Malformed textual input. ``offset`` is a byte offset into the UTF-8 text."""

    exit_code = 1

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)


class MixedVariables(ParseError):
    pass


class ExponentTooLarge(ParseError):
    pass


class RaggedRows(ParseError):
    pass


class NonSquare(ParseError):
    pass


# -- domain errors (exit 2) -------------------------------------------------

class DomainError(BiquadError, ArithmeticError):
    exit_code = 2


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class MixedFields(DomainError):
    pass


class NegativeRadicand(DomainError):
    pass


class NoRealRoots(DomainError):
    pass


class NegativeDiscriminant(NoRealRoots):
    pass


class NegativeEta(NoRealRoots):
    pass


class NotApplicable(DomainError):
    pass


class NonpositiveSegment(DomainError):
    pass


class ExponentOutOfRange(DomainError):
    pass


class DimensionOutOfRange(DomainError):
    pass


class RadicandTooLarge(DomainError):
    pass


# -- scope errors (exit 3) --------------------------------------------------

class UnsupportedScope(BiquadError):
    exit_code = 3


class UnsupportedDegree(UnsupportedScope):
    pass


class NestingTooDeep(UnsupportedScope):
    pass
