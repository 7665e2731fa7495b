"""Riordan, quasi-Riordan and almost-Riordan arrays and their windows."""
from src.arrays.builders import (
    almost_riordan_block,
    build_almost,
    build_appell,
    build_quasi,
    build_riordan,
    quasi_as_almost,
)
from src.arrays.group import (
    fftqra_apply,
    mult_almost,
    mult_quasi,
    semidirect_factor,
    verify_quasi_factorization,
    verify_semidirect_factorization,
)
from src.arrays.matrix_window import MatrixWindow, MatrixWindowDocument, direct_sum
from src.arrays.specs import AlmostRiordanSpec, QuasiRiordanSpec, RiordanSpec

__all__ = [
    "AlmostRiordanSpec",
    "MatrixWindow",
    "MatrixWindowDocument",
    "QuasiRiordanSpec",
    "RiordanSpec",
    "almost_riordan_block",
    "build_almost",
    "build_appell",
    "build_quasi",
    "build_riordan",
    "direct_sum",
    "fftqra_apply",
    "mult_almost",
    "mult_quasi",
    "quasi_as_almost",
    "semidirect_factor",
    "verify_quasi_factorization",
    "verify_semidirect_factorization",
]
