"""Projective lines over finite rings and their representations in PG(n, q)."""

__version__ = "0.1.0"
