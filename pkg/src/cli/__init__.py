"""Command-line surface: expression parsing and the riordan-tp commands."""
from src.cli.expression import parse_gf, series_from_text, to_text

__all__ = ["parse_gf", "series_from_text", "to_text"]
