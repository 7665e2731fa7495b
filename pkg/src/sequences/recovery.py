"""
Recovery of (d | g, f) from a tridiagonal production matrix.

Given A = a0 + a1 t + a2 t^2, Z = z0 + z1 t + z2 t^2, W = w0 + w1 t and
d(0), the array is

    f = (1 - a1 t - sqrt(1 - 2 a1 t + (a1^2 - 4 a0 a2) t^2)) / (2 a2 t)
    F = 1 - (w0 + z1) t + (w0 z1 - w1 z0) t^2 - z2 (1 - w0 t) t f
    d = d0 (1 - z1 t - z2 t f) / F
    g = d0 z0 / F

with f = a0 t / (1 - a1 t) when a2 = 0.
"""
import logging
from fractions import Fraction

from src.arrays.specs import AlmostRiordanSpec
from src.errors import InsufficientOrder, SqrtFailure, ZeroDenominator
from src.sequences.production import TridiagonalProduction
from src.series import Series, sqrt

logger = logging.getLogger(__name__)

# series are computed this far past the requested order before truncating
_GUARD = 2


def recover_f(a0: Fraction, a1: Fraction, a2: Fraction, order: int) -> Series:
    """The root f of a2 t f^2 + (a1 t - 1) f + a0 t = 0 with f(0) = 0."""
    work = order + _GUARD
    if a2 == 0:
        return (Series([0, a0], work) / Series([1, -a1], work)).truncate(order)
    discriminant = Series([1, -2 * a1, a1 * a1 - 4 * a0 * a2], work)
    numerator = Series([1, -a1], work) - sqrt(discriminant)
    if numerator.coeffs[0] != 0:
        raise SqrtFailure("square-root branch does not vanish at t = 0")
    f = numerator.divide_t(1) / (2 * a2)
    if f.coeffs[0] != 0:
        raise SqrtFailure("recovered f has a nonzero constant term")
    return f.truncate(order)


def recover_from_tridiagonal(p: TridiagonalProduction, d0, order: int) -> AlmostRiordanSpec:
    """
    Build the almost-Riordan array whose production matrix is tridiagonal.

    Args:
        p: The eight production scalars
        d0: The value d(0) of the first column
        order: Truncation order of d, g and f

    Returns:
        The array (d | g, f)

    Raises:
        ZeroDenominator: If F(0) vanishes
        SqrtFailure: If the chosen root does not vanish at 0
    """
    d0 = Fraction(d0)
    work = order + _GUARD
    f = recover_f(p.a0, p.a1, p.a2, work)
    t = Series.t(work)
    denominator = (
        Series([1, -(p.w0 + p.z1), p.w0 * p.z1 - p.w1 * p.z0], work)
        - p.z2 * (1 - p.w0 * t) * t * f
    )
    if denominator.coeffs[0] == 0:
        raise ZeroDenominator("F(0) = 0")
    d = d0 * (1 - p.z1 * t - p.z2 * t * f) / denominator
    g = d0 * p.z0 / denominator
    logger.debug("recovered (d | g, f) to order %d from %s", order, p)
    for name, series in (("d", d), ("g", g), ("f", f)):
        if series.order < order:
            raise InsufficientOrder(f"{name} came out at order {series.order}, below {order}")
    return AlmostRiordanSpec(d.truncate(order), g.truncate(order), f.truncate(order))
