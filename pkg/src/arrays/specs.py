"""
Descriptions of the arrays the toolkit builds.

Three kinds of array are described by tuples of series:
1. RiordanSpec (g, f): column j is g*f^j
2. QuasiRiordanSpec [g, f]: columns g, f, t*f, t^2*f, ...
3. AlmostRiordanSpec (d | g, f): column 0 is d, column j >= 1 is t*g*f^(j-1)

A spec is "constructible" when its window can be built with a positive
diagonal, and "normalized" when it is an element of the corresponding
group (leading constants equal to 1).
"""
from dataclasses import dataclass
from typing import Tuple

from src.errors import InvalidSpec, NotGroupElement
from src.series import Series


def _linear_coeff(f: Series):
    return f.coeffs[1] if f.order >= 1 else 0


@dataclass(frozen=True)
class RiordanSpec:
    """A proper Riordan array (g, f)."""

    g: Series
    f: Series

    def check_valid(self) -> None:
        if self.g.coeffs[0] == 0:
            raise InvalidSpec("g(0) must be nonzero")
        if self.f.coeffs[0] != 0:
            raise InvalidSpec("f(0) must be 0")
        if _linear_coeff(self.f) == 0:
            raise InvalidSpec("f'(0) must be nonzero")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)


@dataclass(frozen=True)
class QuasiRiordanSpec:
    """
    A quasi-Riordan array [g, f].

    Constructible needs g(0) > 0 and f(0) = 0. Group elements additionally
    have g(0) = 1 and f'(0) != 0.
    """

    g: Series
    f: Series

    @property
    def normalized(self) -> bool:
        return self.g.coeffs[0] == 1 and self.f.coeffs[0] == 0 and _linear_coeff(self.f) != 0

    def check_constructible(self) -> None:
        if self.g.coeffs[0] <= 0:
            raise InvalidSpec("quasi-Riordan arrays need g(0) > 0")
        if self.f.coeffs[0] != 0:
            raise InvalidSpec("quasi-Riordan arrays need f(0) = 0")

    def check_normalized(self) -> None:
        if not self.normalized:
            raise NotGroupElement("quasi-Riordan group elements need g(0) = 1, f(0) = 0 and f'(0) != 0")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)


@dataclass(frozen=True)
class AlmostRiordanSpec:
    """
    An almost-Riordan array (d | g, f).

    Constructible: d(0) > 0, g(0) > 0, f(0) = 0 and f'(0) > 0.
    Normalized (group element): d(0) = g(0) = f'(0) = 1 and f(0) = 0.
    """

    d: Series
    g: Series
    f: Series

    @property
    def normalized(self) -> bool:
        return (
            self.d.coeffs[0] == 1
            and self.g.coeffs[0] == 1
            and self.f.coeffs[0] == 0
            and _linear_coeff(self.f) == 1
        )

    @property
    def constructible(self) -> bool:
        return (
            self.d.coeffs[0] > 0
            and self.g.coeffs[0] > 0
            and self.f.coeffs[0] == 0
            and _linear_coeff(self.f) > 0
        )

    def check_constructible(self) -> None:
        if self.d.coeffs[0] <= 0:
            raise InvalidSpec("almost-Riordan arrays need d(0) > 0")
        if self.g.coeffs[0] <= 0:
            raise InvalidSpec("almost-Riordan arrays need g(0) > 0")
        if self.f.coeffs[0] != 0:
            raise InvalidSpec("almost-Riordan arrays need f(0) = 0")
        if _linear_coeff(self.f) <= 0:
            raise InvalidSpec("almost-Riordan arrays need f'(0) > 0")

    def check_normalized(self) -> None:
        if not self.normalized:
            raise NotGroupElement("almost-Riordan group elements need d(0) = g(0) = f'(0) = 1 and f(0) = 0")

    @property
    def order(self) -> int:
        return min(self.d.order, self.g.order, self.f.order)

    def series(self) -> Tuple[Series, Series, Series]:
        return self.d, self.g, self.f
