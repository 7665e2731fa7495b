"""
Riordan TP package.

Exact arithmetic for Riordan, quasi-Riordan and almost-Riordan arrays:
power series, array windows, A/Z/W sequences and production matrices,
total-positivity screens and a replayable worked-example corpus.
"""

__version__ = "0.1.0"
