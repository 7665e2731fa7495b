"""
Test package for riordan-tp.

This package contains tests for the series, arrays, sequences, TP checks,
corpus verification and command line.
"""
