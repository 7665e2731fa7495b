"""Theorem checks, feasible regions and the worked-example corpus."""
from src.verify.corpus import PaperExample, load_corpus
from src.verify.regions import RegionComparison, RegionPoint, region_check, region_from_theorem, region_grid
from src.verify.theorems import (
    constant_g_case,
    corollary_check,
    prop20_check,
    prop22_check,
    prop31_check,
    thm_linear_d_build,
    thm_tg_alpha_build,
)
from src.verify.workflow import CorpusReport, ExampleReport, create_verification_workflow, run_corpus

__all__ = [
    "CorpusReport",
    "ExampleReport",
    "PaperExample",
    "RegionComparison",
    "RegionPoint",
    "constant_g_case",
    "corollary_check",
    "create_verification_workflow",
    "load_corpus",
    "prop20_check",
    "prop22_check",
    "prop31_check",
    "region_check",
    "region_from_theorem",
    "region_grid",
    "run_corpus",
    "thm_linear_d_build",
    "thm_tg_alpha_build",
]
