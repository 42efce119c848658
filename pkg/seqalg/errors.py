"""
Error hierarchy for the sequence-algebra kernel.

Library code raises these; only the CLI layer catches them and maps them to
exit codes (1 for evaluation errors, 2 for ExprSyntaxError).
"""

from typing import Iterable, Optional


class SeqAlgError(Exception):
    """Base class. `subexpression` is filled in by the CLI evaluator."""

    def __init__(self, message: str, subexpression: Optional[str] = None) -> None:
        super().__init__(message)
        self.message = message
        self.subexpression = subexpression

    def __str__(self) -> str:
        if self.subexpression:
            return f"{self.message} (in: {self.subexpression})"
        return self.message


class DivideByZero(SeqAlgError, ZeroDivisionError):
    pass


class NotWhole(SeqAlgError):
    pass


class NotReal(SeqAlgError):
    pass


class NonProductive(SeqAlgError):
    pass


class NotASquareRootDomain(SeqAlgError):
    pass


class NonTerminatingComposition(SeqAlgError):
    pass


class NotConversible(SeqAlgError):
    pass


class NotLogDomain(SeqAlgError):
    pass


class InfiniteInput(SeqAlgError):
    pass


class DegenerateRecurrence(SeqAlgError):
    pass


class DimensionMismatch(SeqAlgError):
    pass


class UnknownName(SeqAlgError):
    pass


class ArityError(SeqAlgError):
    """A known function called with the wrong number of arguments."""


class UnknownSuite(SeqAlgError):
    pass


class ModeError(SeqAlgError):
    """Identifier used outside its evaluation mode (u/z univariate, i rational)."""


class ExprSyntaxError(SeqAlgError):
    """Positioned parse failure; `offset` is a byte offset into the source."""

    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()) -> None:
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f"; expected one of: {', '.join(self.expected)}"
        super().__init__(detail)
