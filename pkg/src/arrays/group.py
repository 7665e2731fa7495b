"""
Group laws of almost-Riordan and quasi-Riordan arrays.

This module provides:
1. The almost-Riordan product (a | g, f)(b | d, h)
2. The quasi-Riordan product [g, f][d, h]
3. The action of a quasi-Riordan array on a generating function
4. The factorizations (g, f) = [g, f]([1] + (g, f)) and
   (d | g, f) = [d, t*g](1 | 1, f), checked on windows

All products are computed on series; the window of a product equals the
product of the windows.
"""
import logging
from typing import Tuple

from src.arrays.builders import build_almost, build_quasi, build_riordan
from src.arrays.matrix_window import MatrixWindow, direct_sum
from src.arrays.specs import AlmostRiordanSpec, QuasiRiordanSpec, RiordanSpec
from src.errors import InvalidArgument
from src.series import Series, compose, shift_t

logger = logging.getLogger(__name__)


def mult_almost(x: AlmostRiordanSpec, y: AlmostRiordanSpec) -> AlmostRiordanSpec:
    """
    Product of two almost-Riordan group elements.

    (a | g, f)(b | d, h) = (a + (t*g/f)(b(f) - 1) | g*d(f), h(f))

    Args:
        x: Left factor (a | g, f), normalized
        y: Right factor (b | d, h), normalized

    Returns:
        The normalized product

    Raises:
        NotGroupElement: If either factor is not normalized
    """
    x.check_normalized()
    y.check_normalized()
    a, g, f = x.series()
    b, d, h = y.series()
    # t*g/f = g / (f/t); f/t is a unit since f'(0) = 1
    tg_over_f = g / f.divide_t(1)
    first = a + tg_over_f * (compose(b, f) - 1)
    product = AlmostRiordanSpec(first, g * compose(d, f), compose(h, f))
    logger.debug("almost-Riordan product known to order %d", product.order)
    return product


def mult_quasi(x: QuasiRiordanSpec, y: QuasiRiordanSpec) -> QuasiRiordanSpec:
    """
    Product of two quasi-Riordan group elements.

    [g, f][d, h] = [g + (f/t)(d - 1), f*h/t]
    """
    x.check_normalized()
    y.check_normalized()
    f_over_t = x.f.divide_t(1)
    return QuasiRiordanSpec(x.g + f_over_t * (y.g - 1), f_over_t * y.f)


def fftqra_apply(q: QuasiRiordanSpec, u: Series) -> Series:
    """
    Apply [g, f] to a generating function: [g, f]u = g*u(0) + (f/t)(u - u(0)).

    The coefficients of the result are the window of [g, f] times the
    coefficient vector of u.
    """
    if q.f.coeffs[0] != 0:
        raise InvalidArgument("[g, f] needs f(0) = 0")
    u0 = u.coeffs[0]
    return q.g * u0 + q.f.divide_t(1) * (u - u0)


def verify_quasi_factorization(spec: RiordanSpec, size: int) -> bool:
    """
    Check (g, f) = [g, f] ([1] + (g, f)) on size x size windows.

    Args:
        spec: A Riordan array with g(0) > 0
        size: Window size N

    Returns:
        True when both sides agree entrywise
    """
    left = build_riordan(spec, size, size)
    quasi = build_quasi(QuasiRiordanSpec(spec.g, spec.f), size, size)
    if size == 1:
        return left == quasi
    shifted = direct_sum(MatrixWindow([[1]]), build_riordan(spec, size - 1, size - 1))
    return left == quasi @ shifted


def semidirect_factor(spec: AlmostRiordanSpec, strict: bool = True) -> Tuple[QuasiRiordanSpec, AlmostRiordanSpec]:
    """
    Split (d | g, f) into [d, t*g] and (1 | 1, f).

    Args:
        spec: The array to factor
        strict: Require a group element. With strict=False any
            constructible spec is accepted; the matrix identity still holds.

    Returns:
        The quasi-Riordan left factor and the almost-Riordan right factor

    Raises:
        NotGroupElement: If strict and the array is not normalized
    """
    if strict:
        spec.check_normalized()
    else:
        spec.check_constructible()
    n = spec.order
    left = QuasiRiordanSpec(spec.d.truncate(n), shift_t(spec.g.truncate(n), 1))
    right = AlmostRiordanSpec(Series.constant(1, n), Series.constant(1, n), spec.f.truncate(n))
    return left, right


def verify_semidirect_factorization(spec: AlmostRiordanSpec, size: int, strict: bool = True) -> bool:
    """Check (d | g, f) = [d, t*g](1 | 1, f) on size x size windows."""
    left, right = semidirect_factor(spec, strict=strict)
    product = build_quasi(left, size, size) @ build_almost(right, size, size)
    return product == build_almost(spec, size, size)
