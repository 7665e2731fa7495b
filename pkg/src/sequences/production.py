"""
Production matrices.

This module provides:
1. TridiagonalProduction, the eight scalars of a tridiagonal production
   matrix, and the four two-parameter families used in the examples
2. production_from_azw: the production matrix J of an A/Z/W triple
3. check_production_identity: window(spec) * J equals window(spec) with
   its first row deleted
4. extract_production: J recovered from a window by forward substitution
5. production_iteration: rows of the array generated from J and d(0)

Layout of J: column 0 holds W, column 1 holds Z, and column j >= 2 holds
the A-coefficients shifted so that J[i][j] = a_(i-j+1).
"""
import logging
from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from src.arrays.builders import build_almost
from src.arrays.matrix_window import MatrixWindow
from src.arrays.specs import AlmostRiordanSpec
from src.errors import InsufficientOrder, InvalidArgument, ShapeMismatch, SingularDiagonal
from src.sequences.characteristic import AZWTriple
from src.series import Rational, Series

logger = logging.getLogger(__name__)

FAMILIES = ("AZW1", "AZW2", "AZW3", "AZW4")


class TridiagonalProduction(BaseModel):
    """
    A(t) = a0 + a1 t + a2 t^2, Z(t) = z0 + z1 t + z2 t^2, W(t) = w0 + w1 t.

    No sign constraints: nonnegativity belongs to the TP criteria.
    """

    model_config = ConfigDict(frozen=True)

    a0: Rational
    a1: Rational
    a2: Rational
    z0: Rational
    z1: Rational
    z2: Rational
    w0: Rational
    w1: Rational

    @property
    def discriminant(self) -> Fraction:
        """a1^2 - 4 a0 a2."""
        return self.a1 * self.a1 - 4 * self.a0 * self.a2

    def parameters(self) -> List[Fraction]:
        return [self.a0, self.a1, self.a2, self.z0, self.z1, self.z2, self.w0, self.w1]

    def as_azw(self, order: int) -> AZWTriple:
        """The polynomial A, Z, W as series of the given order."""
        return AZWTriple(
            Series([self.a0, self.a1, self.a2], order),
            Series([self.z0, self.z1, self.z2], order),
            Series([self.w0, self.w1], order),
            self.z0,
            self.w0,
        )

    @classmethod
    def family(cls, name: str, alpha, beta) -> "TridiagonalProduction":
        """
        Members of the two-parameter families of the worked examples.

        AZW1(alpha, beta): A = 1 + alpha t + alpha^2/4 t^2, Z = 1 + t + t^2, W = 1 + beta t
        AZW2(alpha, beta): A = 1 + alpha t + alpha^2/4 t^2, Z = 1 + t + beta t^2, W = 1 + t/2
        AZW3(alpha, beta): A = 1 + alpha t + t^2, Z = 1 + t + t^2, W = 1 + beta t
        AZW4(alpha, beta): A = 1 + alpha t + t^2, Z = 1 + t + beta t^2, W = 1 + t/3
        """
        alpha, beta = Fraction(alpha), Fraction(beta)
        key = name.upper()
        if key == "AZW1":
            return cls(a0=1, a1=alpha, a2=alpha * alpha / 4, z0=1, z1=1, z2=1, w0=1, w1=beta)
        if key == "AZW2":
            return cls(a0=1, a1=alpha, a2=alpha * alpha / 4, z0=1, z1=1, z2=beta, w0=1, w1=Fraction(1, 2))
        if key == "AZW3":
            return cls(a0=1, a1=alpha, a2=1, z0=1, z1=1, z2=1, w0=1, w1=beta)
        if key == "AZW4":
            return cls(a0=1, a1=alpha, a2=1, z0=1, z1=1, z2=beta, w0=1, w1=Fraction(1, 3))
        raise InvalidArgument(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


def production_from_azw(azw: AZWTriple, rows: int, cols: Optional[int] = None) -> MatrixWindow:
    """
    The rows x cols window of the production matrix of an A/Z/W triple.

    Args:
        azw: The characteristic sequences
        rows: Number of rows
        cols: Number of columns (defaults to rows)

    Returns:
        J with J[i][0] = w_i, J[i][1] = z_i and J[i][j] = a_(i-j+1) for j >= 2

    Raises:
        InsufficientOrder: If Z or W is known below order rows - 1
    """
    cols = rows if cols is None else cols
    if rows < 1 or cols < 1:
        raise InvalidArgument(f"window shape must be positive, got {rows}x{cols}")
    for name, series in (("W", azw.W), ("Z", azw.Z)):
        if series.order < rows - 1:
            raise InsufficientOrder(f"{name} is known to order {series.order}, {rows} rows need {rows - 1}")
    if cols > 2 and azw.A.order < rows - 2:
        raise InsufficientOrder(f"A is known to order {azw.A.order}, {rows} rows need {rows - 2}")
    grid = [[Fraction(0)] * cols for _ in range(rows)]
    for i in range(rows):
        grid[i][0] = azw.W.coeffs[i]
        if cols > 1:
            grid[i][1] = azw.Z.coeffs[i]
        for j in range(2, min(cols, i + 2)):
            grid[i][j] = azw.A.coeffs[i - j + 1]
    return MatrixWindow(grid)


def production_window_from_tridiagonal(p: TridiagonalProduction, rows: int, cols: Optional[int] = None) -> MatrixWindow:
    return production_from_azw(p.as_azw(max(rows, 2)), rows, cols)


def check_production_identity(spec: AlmostRiordanSpec, azw: AZWTriple, size: int) -> bool:
    """
    Check that M J reproduces M without its first row on size x size windows.

    Only rows 0..size-2 of the product are compared: they are the rows
    that the window determines completely.
    """
    if size < 2:
        raise InvalidArgument("the production identity needs at least a 2x2 window")
    window = build_almost(spec, size, size)
    product = window @ production_from_azw(azw, size, size)
    holds = product.block(size - 1, size) == window.block(size - 1, size, 1, 0)
    logger.debug("production identity on %dx%d: %s", size, size, holds)
    return holds


def extract_production(window: MatrixWindow) -> MatrixWindow:
    """
    Solve M J = M-without-first-row for J by forward substitution.

    J[i][j] = (M[i+1][j] - sum_(k<i) M[i][k] J[k][j]) / M[i][i]

    Args:
        window: An R x C lower-triangular window with nonzero diagonal

    Returns:
        The n x n leading window of J, n = min(R - 1, C)

    Raises:
        ShapeMismatch: If the window is too small or not lower triangular
        SingularDiagonal: If a diagonal entry is zero
    """
    size = min(window.rows - 1, window.cols)
    if size < 1:
        raise ShapeMismatch("extracting a production matrix needs at least two rows")
    if not window.is_lower_triangular():
        raise ShapeMismatch("production matrices exist only for lower-triangular windows")
    m = window.to_rows()
    for i in range(size):
        if m[i][i] == 0:
            raise SingularDiagonal(f"diagonal entry ({i}, {i}) is zero")
    j_rows: List[List[Fraction]] = []
    for i in range(size):
        pivot = m[i][i]
        row = []
        for j in range(size):
            acc = m[i + 1][j] - sum((m[i][k] * j_rows[k][j] for k in range(i)), Fraction(0))
            row.append(acc / pivot)
        j_rows.append(row)
    return MatrixWindow(j_rows)


def production_iteration(production: MatrixWindow, d0, rows: int) -> MatrixWindow:
    """
    Generate an array from its production matrix.

    Row 0 is (d0, 0, 0, ...) and row n+1 = row n times J. This is an
    oracle independent of the series machinery.

    Args:
        production: A window of J with at least rows - 1 rows
        d0: The top-left entry of the array
        rows: Number of rows to generate

    Returns:
        A rows x J.cols window
    """
    if production.rows < rows - 1:
        raise ShapeMismatch(f"{rows} rows need a production window with {rows - 1} rows")
    width = production.cols
    first = [Fraction(d0)] + [Fraction(0)] * (width - 1)
    generated = [first]
    for n in range(rows - 1):
        current = generated[-1]
        nxt = [sum((current[k] * production[k, j] for k in range(min(n + 1, production.rows))), Fraction(0))
               for j in range(width)]
        generated.append(nxt)
    return MatrixWindow(generated)
