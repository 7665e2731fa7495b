"""
Window builders.

Each builder turns a spec into the top-left R x C window of its infinite
lower-triangular array. Entry (i, j) is the coefficient of t^i in the
generating function of column j, so every series must be known to
order R - 1.
"""
import logging
from fractions import Fraction
from typing import List

from src.arrays.matrix_window import MatrixWindow
from src.arrays.specs import AlmostRiordanSpec, QuasiRiordanSpec, RiordanSpec
from src.errors import InsufficientOrder, InvalidArgument
from src.series import Series, mul

logger = logging.getLogger(__name__)


def _check_shape(rows: int, cols: int) -> None:
    if rows < 1 or cols < 1:
        raise InvalidArgument(f"window shape must be positive, got {rows}x{cols}")


def _check_order(rows: int, **named: Series) -> None:
    for name, series in named.items():
        if series.order < rows - 1:
            raise InsufficientOrder(
                f"{name} is known to order {series.order}, a {rows}-row window needs order {rows - 1}"
            )


def _column(series: Series, rows: int, shift: int = 0) -> List[Fraction]:
    """Coefficients of t^0..t^(rows-1) of t^shift * series."""
    return [series.coeffs[i - shift] if i >= shift else Fraction(0) for i in range(rows)]


def build_riordan(spec: RiordanSpec, rows: int, cols: int) -> MatrixWindow:
    """
    Window of the Riordan array (g, f): entry (i, j) = [t^i] g*f^j.

    Args:
        spec: A valid Riordan spec
        rows: Number of rows R
        cols: Number of columns C

    Returns:
        The R x C window
    """
    _check_shape(rows, cols)
    spec.check_valid()
    _check_order(rows, g=spec.g, f=spec.f)
    g, f = spec.g.truncate(rows - 1), spec.f.truncate(rows - 1)
    columns = []
    current = g
    for _ in range(cols):
        columns.append(_column(current, rows))
        current = mul(current, f)
    return MatrixWindow.from_columns(columns, rows)


def build_appell(g: Series, rows: int, cols: int) -> MatrixWindow:
    """The Appell array (g, t)."""
    return build_riordan(RiordanSpec(g, Series.t(g.order)), rows, cols)


def build_quasi(spec: QuasiRiordanSpec, rows: int, cols: int) -> MatrixWindow:
    """
    Window of the quasi-Riordan array [g, f].

    Column 0 is g and column j >= 1 is t^(j-1) * f.
    """
    _check_shape(rows, cols)
    spec.check_constructible()
    _check_order(rows, g=spec.g, f=spec.f)
    columns = [_column(spec.g, rows)]
    columns.extend(_column(spec.f, rows, shift=j - 1) for j in range(1, cols))
    return MatrixWindow.from_columns(columns, rows)


def build_almost(spec: AlmostRiordanSpec, rows: int, cols: int) -> MatrixWindow:
    """
    Window of the almost-Riordan array (d | g, f).

    Column 0 is d; column j >= 1 is t*g*f^(j-1).

    Args:
        spec: A constructible almost-Riordan spec
        rows: Number of rows R
        cols: Number of columns C

    Returns:
        The R x C window, lower triangular with positive diagonal

    Raises:
        InvalidSpec: If the array cannot be built
        InsufficientOrder: If a series is known below order R - 1
    """
    _check_shape(rows, cols)
    spec.check_constructible()
    _check_order(rows, d=spec.d, g=spec.g, f=spec.f)
    n = rows - 1
    d, g, f = spec.d.truncate(n), spec.g.truncate(n), spec.f.truncate(n)
    columns = [_column(d, rows)]
    current = g
    for _ in range(1, cols):
        columns.append(_column(current, rows, shift=1))
        current = mul(current, f)
    logger.debug("built %dx%d almost-Riordan window", rows, cols)
    return MatrixWindow.from_columns(columns, rows)


def quasi_as_almost(spec: QuasiRiordanSpec) -> AlmostRiordanSpec:
    """
    Rewrite [g, f] as the almost-Riordan array (g | f/t, t).

    Both have the same window; f/t is known to one order less than f.
    """
    f_over_t = spec.f.divide_t(1)
    return AlmostRiordanSpec(spec.g.truncate(f_over_t.order), f_over_t, Series.t(f_over_t.order))


def almost_riordan_block(spec: AlmostRiordanSpec, rows: int, cols: int) -> MatrixWindow:
    """Rows >= 1 and columns >= 1 of (d | g, f), which equal the window of (g, f)."""
    full = build_almost(spec, rows + 1, cols + 1)
    return full.block(rows, cols, 1, 1)
