"""
Polya-frequency tests for sequences.

A sequence is PF when its Toeplitz matrix T[i][j] = s_(i-j) is totally
positive. Two tests are offered: an exact one for polynomials of degree
at most 2 (nonnegative coefficients and real roots), and a necessary
screen on a finite Toeplitz window.
"""
from fractions import Fraction
from typing import Optional

from src.arrays.matrix_window import MatrixWindow
from src.errors import DegreeTooHigh
from src.series import Series
from src.tp.minors import TPReport, tp_check


def pf_polynomial_check(p: Series) -> bool:
    """
    Exact PF test for a polynomial of degree at most 2.

    Args:
        p: The polynomial as a series

    Returns:
        True iff every coefficient is nonnegative, p is not zero and its
        roots are real (which makes them nonpositive)

    Raises:
        DegreeTooHigh: If p has a nonzero coefficient above t^2
    """
    degree = p.degree()
    if degree is None:
        return False
    if degree > 2:
        raise DegreeTooHigh(f"exact PF test covers degree <= 2, got degree {degree}")
    c = [p.coeffs[k] if k <= p.order else Fraction(0) for k in range(3)]
    if any(x < 0 for x in c):
        return False
    # strip the t^k factor, then a quadratic needs a nonnegative discriminant
    low = p.valuation()
    rest = c[low:]
    if len(rest) < 3 or rest[2] == 0:
        return True
    return rest[1] * rest[1] - 4 * rest[0] * rest[2] >= 0


def toeplitz_window(s: Series, size: int) -> MatrixWindow:
    """The size x size lower-triangular Toeplitz window of s."""
    return MatrixWindow([[s.coeff(i - j) if i >= j else Fraction(0) for j in range(size)] for i in range(size)])


def pf_window_check(s: Series, window: int, order: Optional[int] = None) -> TPReport:
    """Necessary PF screen: tp_check on the Toeplitz window of s."""
    return tp_check(toeplitz_window(s, window), max_order=order)
