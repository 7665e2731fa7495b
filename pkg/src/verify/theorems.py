"""
Constructions and checks behind the total-positivity results.

This module provides:
1. thm_tg_alpha_build: the window of (t*g + alpha | g, f)
2. thm_linear_d_build: the window of (d0 + d1 t | g, f)
3. corollary_check: f PF and [d, t*g] TP give (d | g, f) TP
4. Window-level checks that relate (1 | g, f), the (g, f) block and
   the full array, and that tie a TP tridiagonal production matrix to
   its array
5. constant_g_case: the production matrix of [d, alpha*t]
"""
import logging
from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict

from src.arrays.builders import almost_riordan_block, build_almost, build_quasi, build_riordan
from src.arrays.matrix_window import MatrixWindow
from src.arrays.specs import AlmostRiordanSpec, QuasiRiordanSpec, RiordanSpec
from src.errors import InvalidSpec
from src.sequences.characteristic import AZWTriple, azw_from_quasi
from src.sequences.production import TridiagonalProduction
from src.sequences.recovery import recover_from_tridiagonal
from src.series import Series, shift_t
from src.tp.jacobi import Verdict, exact_tridiagonal_check
from src.tp.minors import TPReport, tp_check
from src.tp.polya import pf_polynomial_check, pf_window_check

logger = logging.getLogger(__name__)


class CorollaryReport(BaseModel):
    """Premises and conclusion of the PF-f / quasi-TP corollary on one window."""

    model_config = ConfigDict(frozen=True)

    f_is_pf: bool
    f_pf_method: Literal["polynomial", "window"]
    quasi_report: TPReport
    conclusion_report: TPReport

    @property
    def premises_hold(self) -> bool:
        return self.f_is_pf and self.quasi_report.is_tp

    @property
    def consistent(self) -> bool:
        """The corollary is never contradicted: premises imply conclusion."""
        return not self.premises_hold or self.conclusion_report.is_tp


class PropositionCheck(BaseModel):
    """A premise => conclusion check evaluated on windows."""

    model_config = ConfigDict(frozen=True)

    name: str
    premise: bool
    conclusion: bool

    @property
    def holds(self) -> bool:
        return not self.premise or self.conclusion


def thm_tg_alpha_build(g: Series, f: Series, alpha, size: int) -> MatrixWindow:
    """
    Window of (t*g + alpha | g, f).

    Column 0 is alpha on top of the coefficients of g, beside the (g, f)
    block.

    Raises:
        InvalidSpec: If alpha <= 0 or (g, f) is not a Riordan array
    """
    if alpha <= 0:
        raise InvalidSpec(f"alpha must be positive, got {alpha}")
    RiordanSpec(g, f).check_valid()
    d = shift_t(g, 1) + alpha
    return build_almost(AlmostRiordanSpec(d, g, f), size, size)


def thm_linear_d_build(g: Series, f: Series, d0, d1, size: int) -> MatrixWindow:
    """Window of (d0 + d1 t | g, f) for d0, d1 >= 0."""
    if d0 < 0 or d1 < 0:
        raise InvalidSpec("d0 and d1 must be nonnegative")
    RiordanSpec(g, f).check_valid()
    d = Series([d0, d1], g.order)
    return build_almost(AlmostRiordanSpec(d, g, f), size, size)


def corollary_check(d: Series, g: Series, f: Series, size: int, max_order: int = 4) -> CorollaryReport:
    """
    Evaluate the corollary on size x size windows.

    f is tested exactly when it is a polynomial of degree <= 2, otherwise
    with the Toeplitz window screen.

    Args:
        d, g, f: The almost-Riordan array (d | g, f)
        size: Window size
        max_order: Largest minor order enumerated

    Returns:
        The premise and conclusion reports
    """
    if f.is_polynomial(2):
        f_is_pf, method = pf_polynomial_check(f), "polynomial"
    else:
        f_is_pf, method = pf_window_check(f, size, max_order).is_tp, "window"
    quasi = QuasiRiordanSpec(d, shift_t(g, 1))
    quasi_report = tp_check(build_quasi(quasi, size, size), max_order=max_order)
    conclusion = tp_check(build_almost(AlmostRiordanSpec(d, g, f), size, size), max_order=max_order)
    report = CorollaryReport(f_is_pf=f_is_pf, f_pf_method=method,
                             quasi_report=quasi_report, conclusion_report=conclusion)
    logger.debug("corollary: premises=%s conclusion=%s", report.premises_hold, conclusion.verdict)
    return report


def prop22_check(g: Series, f: Series, size: int, max_order: int) -> Tuple[TPReport, TPReport]:
    """
    Reports for (1 | g, f) on a size window and (g, f) on a size - 1 window.

    (1 | g, f) is [1] + (g, f), so both verdicts agree.
    """
    n = max(g.order, f.order)
    unit = AlmostRiordanSpec(Series.constant(1, n), g, f)
    full = tp_check(build_almost(unit, size, size), max_order=max_order)
    block = tp_check(build_riordan(RiordanSpec(g, f), size - 1, size - 1), max_order=min(max_order, size - 1))
    return full, block


def prop20_check(spec: AlmostRiordanSpec, size: int, max_order: int) -> PropositionCheck:
    """(g, f) block not TP => (d | g, f) not TP."""
    block = tp_check(almost_riordan_block(spec, size - 1, size - 1), max_order=min(max_order, size - 1))
    full = tp_check(build_almost(spec, size, size), max_order=max_order)
    return PropositionCheck(name="block-not-tp-implies-array-not-tp",
                            premise=not block.is_tp, conclusion=not full.is_tp)


def prop31_check(p: TridiagonalProduction, d0, size: int, max_order: int) -> PropositionCheck:
    """Tridiagonal J TP => the recovered array's window is TP."""
    premise = exact_tridiagonal_check(p) == Verdict.TP
    spec = recover_from_tridiagonal(p, d0, size + 1)
    report = tp_check(build_almost(spec, size, size), max_order=max_order)
    return PropositionCheck(name="tp-production-implies-tp-array", premise=premise, conclusion=report.is_tp)


def constant_g_case(alpha, d: Series, order: int) -> Tuple[AZWTriple, Verdict]:
    """
    Production data of [d, alpha*t], the quasi array with g constant.

    Returns:
        The A/Z/W triple and the exact TP verdict of its production
        matrix. The verdict is NotTP unless Z and W are polynomials of
        degree <= 1 with nonnegative coefficients; in practice only a
        constant d passes.
    """
    quasi = QuasiRiordanSpec(d, Series([0, alpha], d.order))
    azw = azw_from_quasi(quasi, order)
    if not (azw.Z.is_polynomial(1) and azw.W.is_polynomial(1)):
        return azw, Verdict.NOT_TP
    p = TridiagonalProduction(
        a0=1, a1=0, a2=0,
        z0=azw.Z.coeffs[0], z1=azw.Z.coeffs[1], z2=0,
        w0=azw.W.coeffs[0], w1=azw.W.coeffs[1],
    )
    return azw, exact_tridiagonal_check(p)
