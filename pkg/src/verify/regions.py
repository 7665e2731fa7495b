"""
Feasible regions of the four two-parameter production families.

region_check evaluates the printed region predicates exactly:

    AZW1: beta >= 0 and alpha (1 - beta) >= 2
    AZW2: 0 <= beta <= alpha / 4
    AZW3: 0 <= beta <= 1 - 1/alpha          (alpha > 2)
    AZW4: 0 <= beta <= 1 - alpha/3          (2 < alpha <= 3)

region_from_theorem re-derives membership from the closed-form criteria
and from the exact tridiagonal decision, so the three can be compared.
"""
from fractions import Fraction
from typing import List

from pydantic import BaseModel, ConfigDict

from src.errors import InvalidArgument, OutOfDomain
from src.sequences.production import FAMILIES, TridiagonalProduction
from src.series import Rational
from src.tp.jacobi import Verdict, exact_tridiagonal_check, one_root_check, thm34_check


class RegionPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str
    alpha: Rational
    beta: Rational
    inside: bool


class RegionComparison(BaseModel):
    """Printed region, closed-form theorem verdict and exact verdict at one point."""

    model_config = ConfigDict(frozen=True)

    family: str
    alpha: Rational
    beta: Rational
    printed: bool
    theorem: Verdict
    exact: Verdict


def _family_key(family: str) -> str:
    key = family.upper()
    if key not in FAMILIES:
        raise InvalidArgument(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    return key


def check_domain(family: str, alpha) -> None:
    """
    Raises:
        OutOfDomain: If alpha lies outside the family's domain
    """
    key = _family_key(family)
    alpha = Fraction(alpha)
    if key in ("AZW1", "AZW2") and alpha < 0:
        raise OutOfDomain(f"{key} needs alpha >= 0, got {alpha}")
    if key == "AZW3" and alpha <= 2:
        raise OutOfDomain(f"AZW3 needs alpha > 2, got {alpha}")
    if key == "AZW4" and not 2 < alpha <= 3:
        raise OutOfDomain(f"AZW4 needs 2 < alpha <= 3, got {alpha}")


def region_check(family: str, alpha, beta) -> bool:
    """
    Exact membership in the printed feasible region.

    Args:
        family: One of AZW1..AZW4
        alpha: First family parameter
        beta: Second family parameter

    Returns:
        True when (alpha, beta) lies in the region

    Raises:
        OutOfDomain: If alpha is outside the family's domain
    """
    key = _family_key(family)
    check_domain(key, alpha)
    alpha, beta = Fraction(alpha), Fraction(beta)
    if beta < 0:
        return False
    if key == "AZW1":
        return alpha * (1 - beta) >= 2
    if key == "AZW2":
        return beta <= alpha / 4
    if key == "AZW3":
        return beta <= 1 - 1 / alpha
    return beta <= 1 - alpha / 3


def region_from_theorem(family: str, alpha, beta) -> RegionComparison:
    """Compare the printed region with the theorem conditions and the exact criterion."""
    key = _family_key(family)
    printed = region_check(key, alpha, beta)
    p = TridiagonalProduction.family(key, alpha, beta)
    theorem = one_root_check(p) if p.discriminant == 0 else thm34_check(p)
    return RegionComparison(family=key, alpha=alpha, beta=beta, printed=printed,
                            theorem=theorem, exact=exact_tridiagonal_check(p))


def _steps(low: Fraction, high: Fraction, step: Fraction) -> List[Fraction]:
    values = []
    current = low
    while current <= high:
        values.append(current)
        current += step
    return values


def region_grid(family: str, alpha_min, alpha_max, beta_min, beta_max, step) -> List[RegionPoint]:
    """
    Evaluate the region on a rectangular grid.

    Points whose alpha lies outside the family's domain are skipped.
    """
    key = _family_key(family)
    step = Fraction(step)
    if step <= 0:
        raise InvalidArgument("grid step must be positive")
    points = []
    for alpha in _steps(Fraction(alpha_min), Fraction(alpha_max), step):
        try:
            check_domain(key, alpha)
        except OutOfDomain:
            continue
        for beta in _steps(Fraction(beta_min), Fraction(beta_max), step):
            points.append(RegionPoint(family=key, alpha=alpha, beta=beta,
                                      inside=region_check(key, alpha, beta)))
    return points
