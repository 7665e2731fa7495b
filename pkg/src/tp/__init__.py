"""Exact total-positivity checks."""
from src.tp.jacobi import (
    Verdict,
    det_J,
    det_T_closed,
    det_T_recurrence,
    det_T_sequence,
    exact_tridiagonal_check,
    find_negative_T,
    is_tridiagonal,
    jacobi_tp_check,
    negative_search_limit,
    one_root_check,
    thm34_check,
)
from src.tp.minors import TPReport, Witness, count_minors, determinant, minor, tp_check
from src.tp.polya import pf_polynomial_check, pf_window_check, toeplitz_window

__all__ = [
    "TPReport",
    "Verdict",
    "Witness",
    "count_minors",
    "det_J",
    "det_T_closed",
    "det_T_recurrence",
    "det_T_sequence",
    "determinant",
    "exact_tridiagonal_check",
    "find_negative_T",
    "is_tridiagonal",
    "jacobi_tp_check",
    "minor",
    "negative_search_limit",
    "one_root_check",
    "pf_polynomial_check",
    "pf_window_check",
    "thm34_check",
    "toeplitz_window",
]
