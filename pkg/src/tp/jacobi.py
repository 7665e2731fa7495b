"""
Total positivity of tridiagonal production matrices.

This module provides:
1. jacobi_tp_check: a tridiagonal matrix with nonnegative entries is TP
   iff all principal minors on consecutive rows are nonnegative
2. Determinants of the Toeplitz part T_n and of the leading blocks J_n
3. The closed-form criteria for the two-root and one-root cases, and the
   search for the first negative det(T_n) when the roots are complex
4. exact_tridiagonal_check, a decision procedure for the infinite matrix

For J built from (a0, a1, a2, z0, z1, z2, w0, w1), with T_0 = 1,
T_1 = a1 and T_n = a1 T_(n-1) - a0 a2 T_(n-2):

    det J_n = (w0 z1 - w1 z0) T_(n-2) - w0 z2 a0 T_(n-3)
"""
import logging
import math
from enum import Enum
from fractions import Fraction
from typing import List, Optional

from src.arrays.matrix_window import MatrixWindow
from src.errors import InvalidArgument, NotFoundWithinLimit, ShapeMismatch
from src.sequences.production import TridiagonalProduction
from src.series.rational import is_rational_square, rational_sqrt
from src.tp.minors import TPReport, Witness

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    TP = "TP"
    NOT_TP = "NotTP"
    INAPPLICABLE = "Inapplicable"


def is_tridiagonal(window: MatrixWindow) -> bool:
    return all(
        window[i, j] == 0
        for i in range(window.rows)
        for j in range(window.cols)
        if abs(i - j) > 1
    )


def _continuant_minors(grid: List[List[Fraction]], start: int, stop: int) -> List[Fraction]:
    """
    Leading principal minors of the tridiagonal block grid[start:stop].

    D_k = a_k D_(k-1) - b_(k-1) c_(k-1) D_(k-2), one value per size 1..stop-start.
    """
    values: List[Fraction] = []
    previous, current = Fraction(0), Fraction(1)
    for k in range(start, stop):
        coupling = grid[k][k - 1] * grid[k - 1][k] if k > start else Fraction(0)
        previous, current = current, grid[k][k] * current - coupling * previous
        values.append(current)
    return values


def jacobi_tp_check(window: MatrixWindow, n_max: Optional[int] = None) -> TPReport:
    """
    Screen a tridiagonal window using consecutive principal minors.

    Entries are checked first (a negative entry is a 1x1 witness); then
    every principal minor on rows start..start+k-1 for k >= 2. Minors on
    consecutive rows of a tridiagonal matrix are continuants, so the scan
    costs O(n^2).

    Args:
        window: The production matrix window
        n_max: Size of the leading block to screen (defaults to the window)

    Returns:
        A TPReport with checked_order equal to the screened size

    Raises:
        ShapeMismatch: If the screened block is not tridiagonal
    """
    n = min(window.rows, window.cols) if n_max is None else min(n_max, window.rows, window.cols)
    if n < 1:
        raise InvalidArgument("n_max must be positive")
    block = window.leading(n)
    grid = block.to_rows()
    checked = 0
    for i in range(n):
        for j in range(n):
            checked += 1
            if grid[i][j] < 0:
                return TPReport(
                    verdict="NotTP", checked_order=n, minors_checked=checked, strategy="jacobi",
                    witness=Witness(rows=[i], cols=[j], value=grid[i][j]),
                )
    if not is_tridiagonal(block):
        raise ShapeMismatch("jacobi_tp_check needs a tridiagonal window")
    minors = {start: _continuant_minors(grid, start, n) for start in range(n)}
    for k in range(2, n + 1):
        for start in range(n - k + 1):
            checked += 1
            value = minors[start][k - 1]
            if value < 0:
                indices = list(range(start, start + k))
                logger.debug("negative consecutive principal minor %s on rows %s", value, indices)
                return TPReport(
                    verdict="NotTP", checked_order=n, minors_checked=checked, strategy="jacobi",
                    witness=Witness(rows=indices, cols=indices, value=value),
                )
    return TPReport(verdict="WindowTP", checked_order=n, minors_checked=checked, strategy="jacobi")


def det_T_recurrence(a0, a1, a2, n: int) -> Fraction:
    """det T_n by expansion along the first column."""
    if n < 1:
        raise InvalidArgument(f"n must be at least 1, got {n}")
    a0, a1, a2 = Fraction(a0), Fraction(a1), Fraction(a2)
    previous, current = Fraction(1), a1
    for _ in range(n - 1):
        previous, current = current, a1 * current - a0 * a2 * previous
    return current


def det_T_sequence(a0, a1, a2, n: int) -> List[Fraction]:
    """[T_0, T_1, ..., T_n] with T_0 = 1."""
    a0, a1, a2 = Fraction(a0), Fraction(a1), Fraction(a2)
    values = [Fraction(1)]
    if n >= 1:
        values.append(a1)
    for _ in range(2, n + 1):
        values.append(a1 * values[-1] - a0 * a2 * values[-2])
    return values


def det_T_closed(a0, a1, a2, n: int) -> Fraction:
    """
    det T_n from the roots of x^2 - a1 x + a0 a2.

    With D = a1^2 - 4 a0 a2: (n+1)(a1/2)^n when D = 0, and
    (r1^(n+1) - r2^(n+1)) / sqrt(D) when sqrt(D) is rational. Irrational
    roots fall back to the recurrence so the result stays exact.
    """
    if n < 1:
        raise InvalidArgument(f"n must be at least 1, got {n}")
    a0, a1, a2 = Fraction(a0), Fraction(a1), Fraction(a2)
    disc = a1 * a1 - 4 * a0 * a2
    if disc == 0:
        return (n + 1) * (a1 / 2) ** n
    if is_rational_square(disc):
        root = rational_sqrt(disc)
        r1, r2 = (a1 + root) / 2, (a1 - root) / 2
        return (r1 ** (n + 1) - r2 ** (n + 1)) / root
    return det_T_recurrence(a0, a1, a2, n)


def det_J(p: TridiagonalProduction, n: int) -> Fraction:
    """
    Leading principal minor of order n of the tridiagonal production matrix.

    Args:
        p: The production scalars
        n: Order of the minor, n >= 1

    Returns:
        det J_n
    """
    if n < 1:
        raise InvalidArgument(f"n must be at least 1, got {n}")
    if n == 1:
        return p.w0
    if n == 2:
        return p.w0 * p.z1 - p.z0 * p.w1
    if n == 3:
        return p.w0 * p.z1 * p.a1 - p.w0 * p.z2 * p.a0 - p.w1 * p.z0 * p.a1
    t = det_T_sequence(p.a0, p.a1, p.a2, n - 2)
    return (p.w0 * p.z1 - p.w1 * p.z0) * t[n - 2] - p.w0 * p.z2 * p.a0 * t[n - 3]


def _all_nonnegative(p: TridiagonalProduction) -> bool:
    return all(x >= 0 for x in p.parameters())


def thm34_check(p: TridiagonalProduction) -> Verdict:
    """
    Two-root criterion: a1^2 > 4 a0 a2, w0 z1 - w1 z0 >= 0 and
    w0 z1 a1 - w0 z2 a0 - w1 z0 a1 >= 0.

    These conditions control the leading minors of order up to 3 only;
    exact_tridiagonal_check decides the infinite matrix.
    """
    if not _all_nonnegative(p) or p.discriminant == 0:
        return Verdict.INAPPLICABLE
    if p.discriminant < 0:
        return Verdict.NOT_TP
    c = p.w0 * p.z1 - p.w1 * p.z0
    third = p.w0 * p.z1 * p.a1 - p.w0 * p.z2 * p.a0 - p.w1 * p.z0 * p.a1
    return Verdict.TP if c >= 0 and third >= 0 else Verdict.NOT_TP


def one_root_check(p: TridiagonalProduction) -> Verdict:
    """
    One-root criterion (a1^2 = 4 a0 a2): TP when w0 z1 - w1 z0 >= 0 and
    w0 z1 a1 - w1 z0 a1 - 2 w0 z2 a0 >= 0; NotTP means the condition fails.
    """
    if not _all_nonnegative(p) or p.discriminant != 0:
        return Verdict.INAPPLICABLE
    c = p.w0 * p.z1 - p.w1 * p.z0
    bound = p.w0 * p.z1 * p.a1 - p.w1 * p.z0 * p.a1 - 2 * p.w0 * p.z2 * p.a0
    return Verdict.TP if c >= 0 and bound >= 0 else Verdict.NOT_TP


def negative_search_limit(a0, a1, a2) -> int:
    """
    Search horizon for find_negative_T.

    With a1 = 2 sqrt(a0 a2) cos(theta), the first n with pi < (n+1) theta
    gives a negative det T_n, so 2 pi / theta rows always suffice.
    """
    disc = Fraction(a1) ** 2 - 4 * Fraction(a0) * Fraction(a2)
    theta = math.atan2(math.sqrt(float(-disc)), float(a1))
    return max(2, math.ceil(2 * math.pi / theta)) + 1


def find_negative_T(a0, a1, a2, n_limit: Optional[int] = None) -> int:
    """
    Smallest n with det T_n < 0 when x^2 - a1 x + a0 a2 has complex roots.

    Args:
        a0, a1, a2: Nonnegative A-coefficients with a1^2 < 4 a0 a2
        n_limit: Largest n to try (sized from the root angle when omitted)

    Returns:
        The first n with a negative determinant

    Raises:
        InvalidArgument: If the coefficients are negative or the roots are real
        NotFoundWithinLimit: If n_limit is too small
    """
    a0, a1, a2 = Fraction(a0), Fraction(a1), Fraction(a2)
    if min(a0, a1, a2) < 0:
        raise InvalidArgument("a0, a1, a2 must be nonnegative")
    if a1 * a1 - 4 * a0 * a2 >= 0:
        raise InvalidArgument("find_negative_T needs complex roots (a1^2 < 4 a0 a2)")
    limit = negative_search_limit(a0, a1, a2) if n_limit is None else n_limit
    previous, current = Fraction(1), a1
    for n in range(1, limit + 1):
        if current < 0:
            return n
        previous, current = current, a1 * current - a0 * a2 * previous
    raise NotFoundWithinLimit(f"no negative det(T_n) for n <= {limit}")


def _at_least_times_root(x: Fraction, y: Fraction, a1: Fraction, disc: Fraction) -> bool:
    """Exactly decide x * (a1 + sqrt(disc)) / 2 >= y for x >= 0, disc >= 0."""
    gap = 2 * y - x * a1
    if gap <= 0:
        return True
    return x * x * disc >= gap * gap


def exact_tridiagonal_check(p: TridiagonalProduction) -> Verdict:
    """
    Decide total positivity of the infinite tridiagonal production matrix.

    With c = w0 z1 - w1 z0, e = w0 z2 a0, D = a1^2 - 4 a0 a2 and
    r = (a1 + sqrt(D)) / 2, the matrix is TP iff every scalar is
    nonnegative, D >= 0, c >= 0, c r >= e and z1 r >= a0 z2. The leading
    minors are c T_(n-2) - e T_(n-3) and the minors starting at row 1 are
    z1 T_(k-1) - a0 z2 T_(k-2); T_k / T_(k-1) decreases to r, so the
    worst case is the limit.

    Args:
        p: The production scalars

    Returns:
        Verdict.TP or Verdict.NOT_TP
    """
    if not _all_nonnegative(p):
        return Verdict.NOT_TP
    disc = p.discriminant
    if disc < 0:
        return Verdict.NOT_TP
    c = p.w0 * p.z1 - p.w1 * p.z0
    if c < 0:
        return Verdict.NOT_TP
    if not _at_least_times_root(c, p.w0 * p.z2 * p.a0, p.a1, disc):
        logger.debug("leading minors turn negative: c*r < w0*z2*a0")
        return Verdict.NOT_TP
    if not _at_least_times_root(p.z1, p.a0 * p.z2, p.a1, disc):
        logger.debug("minors from row 1 turn negative: z1*r < a0*z2")
        return Verdict.NOT_TP
    return Verdict.TP
