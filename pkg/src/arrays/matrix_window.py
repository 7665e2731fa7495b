"""
Finite exact-rational matrix windows.

This module provides:
1. MatrixWindow, an R x C view of an infinite lower-triangular array held
   as a numpy object array of Fractions
2. Structural helpers (submatrices, blocks, direct sums, products)
3. JSON and CSV readers/writers and a plain-text renderer

Entries are always Fractions, so every product and determinant built on
top of a window is exact.
"""
import csv
import io
import json
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from src.errors import ShapeMismatch, WindowIndexError
from src.series.rational import Rational, RationalLike, format_decimal, format_rational, parse_rational


class MatrixWindowDocument(BaseModel):
    """JSON form of a window: shape plus rows of fraction strings."""

    model_config = ConfigDict(frozen=True)

    rows: int
    cols: int
    entries: List[List[Rational]]

    @model_validator(mode="after")
    def _check_shape(self) -> "MatrixWindowDocument":
        if self.rows < 1 or self.cols < 1:
            raise ValueError("a window has at least one row and one column")
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        return self


def _exact(values) -> np.ndarray:
    """Copy into a 2-D object array whose entries are all Fractions."""
    return np.array([[parse_rational(x) if not isinstance(x, Fraction) else x for x in row] for row in values],
                    dtype=object)


class MatrixWindow:
    """
    An R x C matrix of exact rationals.

    Rows and columns are 0-based, matching t-exponents of the array the
    window is cut from.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries):
        array = _exact(entries)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise ShapeMismatch("a window needs a nonempty rectangular list of rows")
        self._entries = array

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatrixWindow":
        return cls([[Fraction(0)] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "MatrixWindow":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: Optional[int] = None) -> "MatrixWindow":
        """
        Build a window from possibly ragged rows.

        Short rows are padded with zeros, which is how lower-triangular
        arrays are usually written down.
        """
        width = cols if cols is not None else max(len(row) for row in rows)
        padded = []
        for row in rows:
            if len(row) > width:
                raise ShapeMismatch(f"row of length {len(row)} does not fit {width} columns")
            padded.append([parse_rational(x) for x in row] + [Fraction(0)] * (width - len(row)))
        return cls(padded)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: int) -> "MatrixWindow":
        grid = [[Fraction(0)] * len(columns) for _ in range(rows)]
        for j, column in enumerate(columns):
            for i in range(rows):
                grid[i][j] = parse_rational(column[i])
        return cls(grid)

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def shape(self):
        return self._entries.shape

    @property
    def array(self) -> np.ndarray:
        """A copy of the underlying object array."""
        return self._entries.copy()

    def entry(self, i: int, j: int) -> Fraction:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise WindowIndexError(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} window")
        return self._entries[i, j]

    def __getitem__(self, index) -> Fraction:
        i, j = index
        return self.entry(i, j)

    def row(self, i: int) -> List[Fraction]:
        return [self.entry(i, j) for j in range(self.cols)]

    def column(self, j: int) -> List[Fraction]:
        return [self.entry(i, j) for i in range(self.rows)]

    def to_rows(self) -> List[List[Fraction]]:
        return [list(row) for row in self._entries]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "MatrixWindow":
        for i in rows:
            if not 0 <= i < self.rows:
                raise WindowIndexError(f"row {i} outside a {self.rows}-row window")
        for j in cols:
            if not 0 <= j < self.cols:
                raise WindowIndexError(f"column {j} outside a {self.cols}-column window")
        return MatrixWindow(self._entries[np.ix_(list(rows), list(cols))])

    def block(self, rows: int, cols: int, row_offset: int = 0, col_offset: int = 0) -> "MatrixWindow":
        """The rows x cols block whose top-left entry is (row_offset, col_offset)."""
        if row_offset + rows > self.rows or col_offset + cols > self.cols:
            raise ShapeMismatch(
                f"{rows}x{cols} block at ({row_offset}, {col_offset}) exceeds a {self.rows}x{self.cols} window"
            )
        return MatrixWindow(self._entries[row_offset:row_offset + rows, col_offset:col_offset + cols])

    def leading(self, n: int) -> "MatrixWindow":
        return self.block(n, n)

    def matmul(self, other: "MatrixWindow") -> "MatrixWindow":
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return MatrixWindow(self._entries.dot(other._entries))

    def __matmul__(self, other: "MatrixWindow") -> "MatrixWindow":
        return self.matmul(other)

    def is_lower_triangular(self) -> bool:
        return all(self._entries[i, j] == 0 for i in range(self.rows) for j in range(i + 1, self.cols))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixWindow):
            return NotImplemented
        return self.shape == other.shape and self.to_rows() == other.to_rows()

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.to_rows()))

    def __repr__(self) -> str:
        return f"MatrixWindow({self.rows}x{self.cols})"

    # Serialization

    def to_document(self) -> MatrixWindowDocument:
        return MatrixWindowDocument(rows=self.rows, cols=self.cols, entries=self.to_rows())

    @classmethod
    def from_document(cls, document: MatrixWindowDocument) -> "MatrixWindow":
        return cls(document.entries)

    def to_json(self, indent: Optional[int] = 2) -> str:
        return self.to_document().model_dump_json(indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "MatrixWindow":
        return cls.from_document(MatrixWindowDocument.model_validate_json(text))

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for row in self._entries:
            writer.writerow([format_rational(x) for x in row])
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "MatrixWindow":
        rows = [row for row in csv.reader(io.StringIO(text)) if row]
        return cls.from_rows(rows)

    @classmethod
    def load(cls, path: str) -> "MatrixWindow":
        """
        Read a window from a .json or .csv file.

        JSON files hold either a window document or a bare list of rows.

        Raises:
            ValueError: If the JSON is neither
        """
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
        if path.lower().endswith(".csv"):
            return cls.from_csv(text)
        payload = json.loads(text)
        if isinstance(payload, list) and all(isinstance(row, list) for row in payload):
            return cls.from_rows(payload)
        return cls.from_json(text)

    def pretty(self, decimal: Optional[int] = None) -> str:
        """
        Right-aligned text rendering.

        Args:
            decimal: When given, a second block with entries rounded to
                that many digits follows the exact one

        Returns:
            The rendered matrix
        """
        lines = _render_grid([[format_rational(x) for x in row] for row in self._entries])
        if decimal is not None:
            lines.append("")
            lines.append(f"~ rounded to {decimal} digits:")
            lines.extend(_render_grid([[format_decimal(x, decimal) for x in row] for row in self._entries]))
        return "\n".join(lines)


def _render_grid(cells: List[List[str]]) -> List[str]:
    width = max(len(cell) for row in cells for cell in row)
    return ["[ " + "  ".join(cell.rjust(width) for cell in row) + " ]" for row in cells]


def direct_sum(a: MatrixWindow, b: MatrixWindow) -> MatrixWindow:
    """The block-diagonal matrix with a on top-left and b on bottom-right."""
    grid = [[Fraction(0)] * (a.cols + b.cols) for _ in range(a.rows + b.rows)]
    for i, row in enumerate(a.to_rows()):
        grid[i][:a.cols] = row
    for i, row in enumerate(b.to_rows()):
        grid[a.rows + i][a.cols:] = row
    return MatrixWindow(grid)
