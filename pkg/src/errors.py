"""
Error types for the Riordan total-positivity toolkit.

Every failure raised by the library derives from RiordanError so callers
(and the command line front end) can catch the whole family at once.
Errors that can only come from evaluating a generating function derive
from EvalError, which the CLI maps to its evaluation exit code.
"""
from typing import Optional


class RiordanError(Exception):
    """Base class for all library errors."""


class InvalidArgument(RiordanError, ValueError):
    """A scalar argument is outside the range an operation accepts."""


# Evaluation of series / generating functions

class EvalError(RiordanError):
    """A generating function could not be evaluated to a series."""


class DivByNonUnit(EvalError):
    """Division by a series whose constant term is zero."""


class InnerNotDelta(EvalError):
    """Composition with an inner series that has a nonzero constant term."""


class NotInvertible(EvalError):
    """A series has no compositional inverse (f(0) != 0 or f'(0) == 0)."""


class NotReversible(NotInvertible):
    """The f of a spec cannot be reverted, so A/Z/W are undefined."""


class NonSquareConstantTerm(EvalError):
    """Square root of a series whose constant term is not a rational square."""


class UncanceledPole(EvalError):
    """Division by a power of t that the numerator does not cancel."""


class InsufficientOrder(EvalError):
    """A series is truncated below the order an operation needs."""


class SqrtFailure(EvalError):
    """The square-root branch produced a series with f(0) != 0."""


class ZeroDenominator(EvalError):
    """The denominator F(t) of the recovery formulas vanishes at 0."""


# Arrays and groups

class InvalidSpec(RiordanError):
    """The (d, g, f) data does not describe a constructible array."""


class NotGroupElement(InvalidSpec):
    """The array is constructible but not normalized for group operations."""


class WindowIndexError(RiordanError, IndexError):
    """Entry access outside a matrix window."""


class SingularDiagonal(RiordanError):
    """A lower-triangular window has a zero on its diagonal."""


class ShapeMismatch(RiordanError):
    """A matrix window does not have the shape an operation requires."""


# Total positivity

class BadIndexSets(RiordanError, ValueError):
    """Row/column index lists are unequal, unsorted or out of bounds."""


class MinorBudgetExceeded(RiordanError):
    """A minor enumeration would exceed the configured budget."""

    def __init__(self, needed: int, budget: int):
        super().__init__(
            f"enumeration needs {needed} minors, budget is {budget} "
            f"(set RIORDAN_TP_MAX_MINORS to raise it)"
        )
        self.needed = needed
        self.budget = budget


class NotFoundWithinLimit(RiordanError):
    """No negative determinant was found before the search limit."""


class DegreeTooHigh(RiordanError):
    """Exact Polya-frequency test requested for a polynomial above degree 2."""


class OutOfDomain(RiordanError, ValueError):
    """Region parameters fall outside the family's domain."""


# Parsing

class GFSyntaxError(RiordanError):
    """A generating-function expression could not be parsed."""

    def __init__(self, message: str, offset: Optional[int] = None):
        super().__init__(
            message if offset is None else f"{message} (at byte {offset})"
        )
        self.message = message
        self.offset = offset
