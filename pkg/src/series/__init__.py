"""Exact truncated formal power series."""
from src.series.power_series import (
    Series,
    add,
    coeff,
    compose,
    div,
    mul,
    neg,
    reversion,
    shift_t,
    sqrt,
    sub,
)
from src.series.rational import Rational, format_rational, parse_rational

__all__ = [
    "Rational",
    "Series",
    "add",
    "coeff",
    "compose",
    "div",
    "format_rational",
    "mul",
    "neg",
    "parse_rational",
    "reversion",
    "shift_t",
    "sqrt",
    "sub",
]
