"""
Exact minors and total-positivity screening of matrix windows.

This module provides:
1. determinant: exact Gaussian elimination over the rationals
2. minor: determinant of a row/column selection, with index validation
3. count_minors: the size of an enumeration, checked against a budget
4. tp_check: lexicographic enumeration of minors up to a given order

A WindowTP verdict only says that every enumerated minor is nonnegative.
It is a necessary condition for total positivity of the infinite array,
never a proof of it.
"""
import logging
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import List, Literal, Optional, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from src import config
from src.arrays.matrix_window import MatrixWindow
from src.errors import BadIndexSets, MinorBudgetExceeded
from src.series import Rational

logger = logging.getLogger(__name__)

Strategy = Literal["all", "contiguous_rows"]


class Witness(BaseModel):
    """A negative minor: its rows, columns and value."""

    model_config = ConfigDict(frozen=True)

    rows: List[int]
    cols: List[int]
    value: Rational


class TPReport(BaseModel):
    """
    Outcome of a total-positivity screen.

    certificate is fixed: a finite window can refute total positivity but
    never establish it for the infinite array.
    """

    model_config = ConfigDict(frozen=True)

    verdict: Literal["WindowTP", "NotTP"]
    checked_order: int
    minors_checked: int = 0
    strategy: str = "all"
    witness: Optional[Witness] = None
    certificate: Literal["necessary-condition"] = "necessary-condition"

    @model_validator(mode="after")
    def _witness_matches_verdict(self) -> "TPReport":
        if self.verdict == "NotTP":
            if self.witness is None or self.witness.value >= 0:
                raise ValueError("a NotTP report needs a witness with a negative value")
        elif self.witness is not None:
            raise ValueError("a WindowTP report carries no witness")
        return self

    @property
    def is_tp(self) -> bool:
        return self.verdict == "WindowTP"


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination with row swaps."""
    a: List[List[Fraction]] = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            factor = a[r][col]
            if factor == 0:
                continue
            factor /= p
            row_r, row_c = a[r], a[col]
            for c in range(col + 1, n):
                row_r[c] -= factor * row_c[c]
    return det


def _check_indices(indices: Sequence[int], bound: int, what: str) -> None:
    if any(not isinstance(i, int) or i < 0 or i >= bound for i in indices):
        raise BadIndexSets(f"{what} indices {list(indices)} out of range 0..{bound - 1}")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise BadIndexSets(f"{what} indices {list(indices)} are not strictly increasing")


def minor(window: MatrixWindow, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    """
    Determinant of the submatrix on the given rows and columns.

    Args:
        window: The matrix
        rows: Strictly increasing row indices
        cols: Strictly increasing column indices, as many as rows

    Returns:
        The exact minor

    Raises:
        BadIndexSets: If the index lists are empty, unequal, unsorted or out of range
    """
    if len(rows) != len(cols) or not rows:
        raise BadIndexSets(f"need equally many rows and columns, got {len(rows)} and {len(cols)}")
    _check_indices(rows, window.rows, "row")
    _check_indices(cols, window.cols, "column")
    grid = window.to_rows()
    return determinant([[grid[i][j] for j in cols] for i in rows])


def count_minors(rows: int, cols: int, max_order: int, strategy: Strategy = "all") -> int:
    """Number of minors tp_check would enumerate."""
    total = 0
    for k in range(1, max_order + 1):
        row_sets = comb(rows, k) if strategy == "all" else rows - k + 1
        total += row_sets * comb(cols, k)
    return total


def _row_sets(rows: int, k: int, strategy: Strategy):
    if strategy == "all":
        return combinations(range(rows), k)
    return (tuple(range(start, start + k)) for start in range(rows - k + 1))


def tp_check(
    window: MatrixWindow,
    max_order: Optional[int] = None,
    strategy: Strategy = "all",
    minor_budget: Optional[int] = None,
) -> TPReport:
    """
    Enumerate minors of order 1..max_order and report the first negative one.

    Minors are visited in lexicographic order of (order, rows, cols), so
    the witness is the same on every run.

    Args:
        window: The matrix to screen
        max_order: Largest minor order; defaults to
            min(RIORDAN_TP_DEFAULT_ORDER, rows, cols)
        strategy: "all" row subsets, or "contiguous_rows" for a cheaper screen
        minor_budget: Cap on the enumeration size; defaults to
            RIORDAN_TP_MAX_MINORS

    Returns:
        A TPReport

    Raises:
        BadIndexSets: If max_order exceeds the window
        MinorBudgetExceeded: If the enumeration is larger than the budget
    """
    limit = min(window.rows, window.cols)
    if max_order is None:
        max_order = min(config.default_tp_order(), limit)
    if max_order < 1 or max_order > limit:
        raise BadIndexSets(f"max_order {max_order} must lie in 1..{limit}")
    if strategy not in ("all", "contiguous_rows"):
        raise BadIndexSets(f"unknown strategy {strategy!r}")
    budget = minor_budget if minor_budget is not None else config.max_minors()
    needed = count_minors(window.rows, window.cols, max_order, strategy)
    if needed > budget:
        raise MinorBudgetExceeded(needed, budget)
    logger.debug("enumerating %d minors of a %dx%d window up to order %d", needed,
                 window.rows, window.cols, max_order)

    grid = window.to_rows()
    checked = 0
    for k in range(1, max_order + 1):
        for row_set in _row_sets(window.rows, k, strategy):
            picked = [grid[i] for i in row_set]
            for col_set in combinations(range(window.cols), k):
                checked += 1
                value = determinant([[row[j] for j in col_set] for row in picked])
                if value < 0:
                    logger.debug("negative minor %s at rows %s cols %s", value, row_set, col_set)
                    return TPReport(
                        verdict="NotTP",
                        checked_order=max_order,
                        minors_checked=checked,
                        strategy=strategy,
                        witness=Witness(rows=list(row_set), cols=list(col_set), value=value),
                    )
    return TPReport(verdict="WindowTP", checked_order=max_order, minors_checked=checked, strategy=strategy)
