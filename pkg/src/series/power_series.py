"""
Truncated formal power series with exact rational coefficients.

This module provides:
1. The Series value type (coefficients of t^0..t^N plus the order N)
2. Ring operations that track how far a result is known
3. Composition, compositional inverse (reversion) and square roots
4. Exact division by powers of t

A Series never reads a coefficient beyond its order. Binary operations
return the smaller of the operand orders; composition and reversion
follow the rules documented on each function.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.errors import (
    DivByNonUnit,
    InnerNotDelta,
    InsufficientOrder,
    InvalidArgument,
    NonSquareConstantTerm,
    NotInvertible,
    UncanceledPole,
)
from src.series.rational import RationalLike, format_rational, parse_rational, rational_sqrt

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class Series:
    """
    A formal power series known up to and including t^order.

    Instances are immutable; all operations return new series.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike], order: Optional[int] = None):
        """
        Create a series from its leading coefficients.

        Args:
            coeffs: Coefficients of t^0, t^1, ...
            order: Truncation degree. Missing coefficients are padded with
                zeros and extra ones dropped. Defaults to len(coeffs) - 1.
        """
        values = [parse_rational(c) for c in coeffs]
        if order is None:
            if not values:
                raise InvalidArgument("a series needs at least one coefficient")
            order = len(values) - 1
        if order < 0:
            raise InvalidArgument(f"series order must be nonnegative, got {order}")
        values = values[: order + 1]
        values.extend(Fraction(0) for _ in range(order + 1 - len(values)))
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    # Constructors

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[RationalLike], order: Optional[int] = None) -> "Series":
        return cls(coeffs, order)

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "Series":
        return cls([value], order)

    @classmethod
    def t(cls, order: int) -> "Series":
        """The series t (just 0 when order is 0)."""
        return cls([0, 1], order)

    @classmethod
    def polynomial(cls, coeffs: Sequence[RationalLike], order: int) -> "Series":
        return cls(coeffs, order)

    @classmethod
    def geometric(cls, ratio: RationalLike, order: int) -> "Series":
        """1/(1 - ratio*t) expanded to the given order."""
        q = parse_rational(ratio)
        return cls([q ** k for k in range(order + 1)], order)

    # Access

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, k: int) -> Fraction:
        """
        Coefficient of t^k.

        Raises:
            InsufficientOrder: If k is beyond the truncation order
        """
        if k < 0:
            raise InvalidArgument(f"coefficient index must be nonnegative, got {k}")
        if k > self.order:
            raise InsufficientOrder(f"coefficient of t^{k} requested from a series of order {self.order}")
        return self._coeffs[k]

    def __getitem__(self, k: int) -> Fraction:
        return self.coeff(k)

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for k, c in enumerate(self._coeffs):
            if c != 0:
                return k
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def is_polynomial(self, degree: int) -> bool:
        """True when every known coefficient above `degree` is zero."""
        return all(c == 0 for c in self._coeffs[degree + 1:])

    def derivative_at_zero(self) -> Fraction:
        return self.coeff(1)

    def degree(self) -> Optional[int]:
        """Degree of the known part, or None for the zero series."""
        for k in range(self.order, -1, -1):
            if self._coeffs[k] != 0:
                return k
        return None

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise InsufficientOrder(f"cannot extend a series of order {self.order} to order {order}")
        return Series(self._coeffs, order)

    # Arithmetic

    def __add__(self, other: Union["Series", Scalar]) -> "Series":
        return add(self, _lift(other, self.order))

    __radd__ = __add__

    def __sub__(self, other: Union["Series", Scalar]) -> "Series":
        return sub(self, _lift(other, self.order))

    def __rsub__(self, other: Scalar) -> "Series":
        return sub(_lift(other, self.order), self)

    def __neg__(self) -> "Series":
        return neg(self)

    def __mul__(self, other: Union["Series", Scalar]) -> "Series":
        if isinstance(other, Series):
            return mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Series", Scalar]) -> "Series":
        if isinstance(other, Series):
            return div(self, other)
        c = parse_rational(other)
        if c == 0:
            raise DivByNonUnit("division of a series by the scalar 0")
        return self.scale(1 / c)

    def __rtruediv__(self, other: Scalar) -> "Series":
        return div(_lift(other, self.order), self)

    def __pow__(self, n: int) -> "Series":
        return self.pow(n)

    def scale(self, c: RationalLike) -> "Series":
        q = parse_rational(c)
        return Series([q * a for a in self._coeffs], self.order)

    def pow(self, n: int) -> "Series":
        """Nonnegative integer power by repeated squaring."""
        if n < 0:
            raise InvalidArgument(f"negative power {n}; divide instead")
        result = Series.constant(1, self.order)
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    def shift_t(self, k: int) -> "Series":
        return shift_t(self, k)

    def divide_t(self, k: int = 1) -> "Series":
        """
        Exact division by t^k.

        The result is known to order - k.

        Raises:
            UncanceledPole: If one of the first k coefficients is nonzero
            InsufficientOrder: If k exceeds the order
        """
        if k < 0:
            raise InvalidArgument(f"cannot divide by t^{k}")
        if k > self.order:
            raise InsufficientOrder(f"cannot divide a series of order {self.order} by t^{k}")
        for i in range(k):
            if self._coeffs[i] != 0:
                raise UncanceledPole(
                    f"division by t^{k} leaves a pole: coefficient of t^{i} is {format_rational(self._coeffs[i])}"
                )
        return Series(self._coeffs[k:], self.order - k)

    # Comparison and display

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Series([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        terms: List[str] = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            if k == 0:
                body = format_rational(magnitude)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if magnitude == 1 else f"{format_rational(magnitude)}*{power}"
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f"{'-' if c < 0 else '+'} {body}")
        head = " ".join(terms) if terms else "0"
        return f"{head} + O(t^{self.order + 1})"


def _lift(value: Union[Series, Scalar], order: int) -> Series:
    if isinstance(value, Series):
        return value
    return Series.constant(value, order)


def add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series([a.coeffs[k] + b.coeffs[k] for k in range(n + 1)], n)


def sub(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series([a.coeffs[k] - b.coeffs[k] for k in range(n + 1)], n)


def neg(a: Series) -> Series:
    return Series([-c for c in a.coeffs], a.order)


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the smaller order."""
    n = min(a.order, b.order)
    x, y = a.coeffs, b.coeffs
    return Series([sum((x[i] * y[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)], n)


def div(a: Series, b: Series) -> Series:
    """
    Quotient a / b of series with b(0) != 0.

    Raises:
        DivByNonUnit: If b has zero constant term
    """
    if b.coeffs[0] == 0:
        raise DivByNonUnit("divisor has zero constant term")
    n = min(a.order, b.order)
    x, y = a.coeffs, b.coeffs
    inv0 = 1 / y[0]
    q: List[Fraction] = []
    for k in range(n + 1):
        acc = x[k] - sum((y[i] * q[k - i] for i in range(1, k + 1)), Fraction(0))
        q.append(acc * inv0)
    return Series(q, n)


def compose(outer: Series, inner: Series) -> Series:
    """
    The series outer(inner(t)).

    Since inner has no constant term, inner^k starts at t^k, so the result
    is known to min(outer.order, inner.order).

    Args:
        outer: The series being substituted into
        inner: A series with inner(0) = 0

    Returns:
        outer composed with inner

    Raises:
        InnerNotDelta: If inner(0) != 0
    """
    if inner.coeffs[0] != 0:
        raise InnerNotDelta(f"inner series has constant term {format_rational(inner.coeffs[0])}")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    # Horner: outer_n, then (acc * inner + outer_k) down to k = 0
    acc = Series.constant(outer.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        acc = mul(acc, inner) + outer.coeffs[k]
    return acc


def reversion(f: Series) -> Series:
    """
    Compositional inverse fbar with f(fbar(t)) = fbar(f(t)) = t.

    Coefficients are fixed one at a time: the coefficient of t^m in
    f(fbar) equals f_1 * fbar_m plus terms in lower coefficients of fbar.

    Raises:
        NotInvertible: If f(0) != 0 or f'(0) == 0
    """
    if f.coeffs[0] != 0:
        raise NotInvertible(f"f(0) = {format_rational(f.coeffs[0])}, expected 0")
    if f.order < 1 or f.coeffs[1] == 0:
        raise NotInvertible("f'(0) = 0, no compositional inverse")
    n = f.order
    f1 = f.coeffs[1]
    g: List[Fraction] = [Fraction(0), 1 / f1]
    for m in range(2, n + 1):
        partial = compose(f.truncate(m), Series(g, m))
        g.append(-partial.coeffs[m] / f1)
    logger.debug("reverted series of order %d", n)
    return Series(g, n)


def sqrt(a: Series) -> Series:
    """
    Square root with the nonnegative leading coefficient.

    A series t^(2k) b with b(0) != 0 has root t^k sqrt(b), known to
    order a.order - k.

    Raises:
        NonSquareConstantTerm: If a vanishes to its known order, has odd
            valuation, or its leading coefficient is not the square of a rational
    """
    k2 = a.valuation()
    if k2 is None:
        raise NonSquareConstantTerm("square root of a series that vanishes to its known order")
    if k2 % 2:
        raise NonSquareConstantTerm(f"square root of a series of odd valuation {k2}")
    k = k2 // 2
    b = a.divide_t(k2) if k2 else a
    s0 = rational_sqrt(b.coeffs[0])
    n = b.order
    s: List[Fraction] = [s0]
    two_s0 = 2 * s0
    for j in range(1, n + 1):
        acc = b.coeffs[j] - sum((s[i] * s[j - i] for i in range(1, j)), Fraction(0))
        s.append(acc / two_s0)
    return Series([Fraction(0)] * k + s, n + k)


def shift_t(a: Series, k: int) -> Series:
    """Multiply by t^k keeping the order (high terms drop off)."""
    if k < 0:
        return a.divide_t(-k)
    return Series([Fraction(0)] * k + list(a.coeffs), a.order)


def coeff(a: Series, k: int) -> Fraction:
    return a.coeff(k)
