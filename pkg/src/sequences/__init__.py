"""A/Z/W sequences, production matrices and recovery from tridiagonal data."""
from src.sequences.characteristic import AZWDocument, AZWTriple, azw_as_series_text, azw_from_almost, azw_from_quasi
from src.sequences.production import (
    FAMILIES,
    TridiagonalProduction,
    check_production_identity,
    extract_production,
    production_from_azw,
    production_iteration,
    production_window_from_tridiagonal,
)
from src.sequences.recovery import recover_f, recover_from_tridiagonal

__all__ = [
    "AZWDocument",
    "AZWTriple",
    "FAMILIES",
    "TridiagonalProduction",
    "azw_as_series_text",
    "azw_from_almost",
    "azw_from_quasi",
    "check_production_identity",
    "extract_production",
    "production_from_azw",
    "production_iteration",
    "production_window_from_tridiagonal",
    "recover_f",
    "recover_from_tridiagonal",
]
