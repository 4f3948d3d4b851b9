"""Exception hierarchy.

Every error carries a machine-readable ``clause`` (the class name by default)
so batch drivers can tell precondition skips from genuine failures.
"""

from __future__ import annotations


class CyclotomeError(ValueError):
    """Base class for all precondition and budget errors."""

    @property
    def clause(self) -> str:
        return type(self).__name__


class NotPrime(CyclotomeError):
    pass


class SizeBudgetExceeded(CyclotomeError):
    pass


class SearchBudgetExceeded(CyclotomeError):
    pass


class DivisionByZero(CyclotomeError, ZeroDivisionError):
    pass


class MixedFields(CyclotomeError):
    pass


class ZeroElement(CyclotomeError):
    pass


class InvalidSubfield(CyclotomeError):
    pass


class NotCoprime(CyclotomeError):
    pass


class OutOfRange(CyclotomeError):
    pass


class EvenModulus(CyclotomeError):
    pass


class NotCosetClosed(CyclotomeError):
    pass


class NotSquareField(CyclotomeError):
    pass


class LengthMismatch(CyclotomeError):
    pass


class FieldMismatch(CyclotomeError):
    pass


class ZeroCode(CyclotomeError):
    pass


class NotSubcode(CyclotomeError):
    pass


class InvalidParameters(CyclotomeError):
    pass


class LemmaFiveExcluded(InvalidParameters):
    """(p, r, m) is one of the small cases where the maximal code misses its dual."""


class DualNotContained(CyclotomeError):
    pass


class NotHermitianSelfOrthogonal(CyclotomeError):
    pass


class OrderNotOdd(CyclotomeError):
    pass


class NoSplitting(CyclotomeError):
    pass


class PreconditionFailed(CyclotomeError):
    def __init__(self, violated: str, message: str = "") -> None:
        super().__init__(message or violated)
        self.violated = violated
