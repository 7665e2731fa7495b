"""
Exact rational scalars.

Every coefficient, matrix entry and determinant in the toolkit is a
fractions.Fraction. This module converts to and from the "p/q" text form
used on the command line and in JSON, and provides the pydantic field
type that keeps JSON round trips exact.
"""
from fractions import Fraction
from math import isqrt
from typing import Annotated, Union

from pydantic import PlainSerializer, PlainValidator

from src.errors import NonSquareConstantTerm

RationalLike = Union[int, str, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """
    Convert an int, Fraction or "p/q" string into a Fraction.

    Floats are rejected: they are not exact.

    Args:
        value: The value to convert

    Returns:
        The exact Fraction
    """
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
    raise ValueError(f"cannot read {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Render as "p" or "p/q"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, digits: int) -> str:
    """Display-only rounding of a Fraction to a fixed number of digits."""
    scaled = round(value * 10 ** digits)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def is_rational_square(value: Fraction) -> bool:
    if value < 0:
        return False
    num, den = value.numerator, value.denominator
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


def rational_sqrt(value: Fraction) -> Fraction:
    """
    Nonnegative square root of a rational square.

    Raises:
        NonSquareConstantTerm: If value has no rational square root
    """
    if not is_rational_square(value):
        raise NonSquareConstantTerm(f"{format_rational(value)} is not the square of a rational")
    return Fraction(isqrt(value.numerator), isqrt(value.denominator))


# pydantic field type: accepts 3, "3", "-7/2" or Fraction(-7, 2); dumps as "-7/2"
Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]
