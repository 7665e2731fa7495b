"""
Characteristic A-, Z- and W-sequences.

This module provides:
1. AZWTriple, the three generating functions that drive a production matrix
2. azw_from_almost for almost-Riordan arrays (d | g, f)
3. azw_from_quasi for quasi-Riordan arrays [d, g], where A = 1

With fbar the compositional inverse of f, z0 = g(0)/d(0) and
w0 = d_1/d(0):

    A = t / fbar
    Z = z0 + t (g(fbar) - z0 d(fbar)) / (fbar g(fbar))
    W = w0 + t (d(fbar) - d0 - w0 fbar d(fbar)) / (fbar^2 g(fbar))

Every division by a power of t is carried out exactly, so the results are
ordinary truncated series.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from pydantic import BaseModel, ConfigDict

from src.arrays.specs import AlmostRiordanSpec, QuasiRiordanSpec
from src.errors import InsufficientOrder, InvalidSpec, NotInvertible, NotReversible
from src.series import Rational, Series, compose, reversion

logger = logging.getLogger(__name__)


class AZWDocument(BaseModel):
    """JSON view of an AZWTriple (coefficient lists as fraction strings)."""

    model_config = ConfigDict(frozen=True)

    A: List[Rational]
    Z: List[Rational]
    W: List[Rational]
    z0: Rational
    w0: Rational


@dataclass(frozen=True)
class AZWTriple:
    A: Series
    Z: Series
    W: Series
    z0: Fraction
    w0: Fraction

    @property
    def order(self) -> int:
        return min(self.A.order, self.Z.order, self.W.order)

    def truncate(self, order: int) -> "AZWTriple":
        return AZWTriple(self.A.truncate(order), self.Z.truncate(order), self.W.truncate(order), self.z0, self.w0)

    def to_document(self) -> AZWDocument:
        return AZWDocument(A=list(self.A.coeffs), Z=list(self.Z.coeffs), W=list(self.W.coeffs),
                           z0=self.z0, w0=self.w0)

    @classmethod
    def from_document(cls, document: AZWDocument) -> "AZWTriple":
        return cls(Series(document.A), Series(document.Z), Series(document.W), document.z0, document.w0)

    @classmethod
    def from_series(cls, A: Series, Z: Series, W: Series) -> "AZWTriple":
        return cls(A, Z, W, Z.coeffs[0], W.coeffs[0])


def azw_as_series_text(azw: AZWTriple) -> str:
    return "\n".join([f"A(t) = {azw.A}", f"Z(t) = {azw.Z}", f"W(t) = {azw.W}"])


def _finish(azw: AZWTriple, order: int, what: str) -> AZWTriple:
    if azw.order < order:
        raise InsufficientOrder(
            f"{what} is known to order {azw.order} only; supply series of order {order + 1} or more"
        )
    return azw.truncate(order)


def azw_from_almost(spec: AlmostRiordanSpec, order: int) -> AZWTriple:
    """
    A-, Z- and W-sequences of (d | g, f).

    Each sequence loses one order to the divisions by t, so the input series
    must be known to order + 1.

    Args:
        spec: The array; f must be reversible and d(0), g(0) nonzero
        order: Truncation order of the returned series

    Returns:
        The AZWTriple

    Raises:
        NotReversible: If f(0) != 0 or f'(0) == 0
        InvalidSpec: If d(0) or g(0) is zero
        InsufficientOrder: If d, g or f is not known far enough
    """
    d, g, f = spec.series()
    try:
        fbar = reversion(f)
    except NotInvertible as exc:
        raise NotReversible(str(exc)) from exc
    d0 = d.coeffs[0]
    if d0 == 0:
        raise InvalidSpec("d(0) must be nonzero for A/Z/W sequences")
    if g.coeffs[0] == 0:
        raise InvalidSpec("g(0) must be nonzero for A/Z/W sequences")
    if d.order < 1:
        raise InsufficientOrder("d must be known to order 1 to read w0")

    z0 = g.coeffs[0] / d0
    w0 = d.coeffs[1] / d0
    unit = fbar.divide_t(1)  # fbar / t
    d_fbar = compose(d, fbar)
    g_fbar = compose(g, fbar)

    A = 1 / unit
    Z = z0 + (g_fbar - z0 * d_fbar) / (unit * g_fbar)
    residual = d_fbar - d0 - w0 * fbar * d_fbar
    W = w0 + residual.divide_t(1) / (unit * unit * g_fbar)
    logger.debug("A/Z/W of an almost-Riordan array: z0=%s w0=%s", z0, w0)
    return _finish(AZWTriple(A, Z, W, z0, w0), order, "the A/Z/W triple")


def azw_from_quasi(spec: QuasiRiordanSpec, order: int) -> AZWTriple:
    """
    A-, Z- and W-sequences of a quasi-Riordan array [d, g].

    Here A = 1, z0 = g_1/d_0, w0 = d_1/d_0 and

        Z = z0 + (g - z0 t d)/g,    W = w0 + ((1 - w0 t) d - d0)/g

    where both quotients cancel one power of t.
    """
    d, g = spec.g, spec.f
    d0 = d.coeffs[0]
    if d0 == 0:
        raise InvalidSpec("[d, g] needs d(0) != 0")
    if g.coeffs[0] != 0:
        raise InvalidSpec("[d, g] needs g(0) = 0")
    if g.order < 1 or g.coeffs[1] == 0:
        raise InvalidSpec("[d, g] needs g'(0) != 0")
    if d.order < 1:
        raise InsufficientOrder("d must be known to order 1 to read w0")

    z0 = g.coeffs[1] / d0
    w0 = d.coeffs[1] / d0
    g_over_t = g.divide_t(1)
    t = Series.t(d.order)
    Z = z0 + (g_over_t - z0 * d) / g_over_t
    W = w0 + ((1 - w0 * t) * d - d0).divide_t(1) / g_over_t
    A = Series.constant(1, min(Z.order, W.order))
    return _finish(AZWTriple(A, Z, W, z0, w0), order, "the A/Z/W triple")
