"""Exact-arithmetic toolkit for dual 3-nets realizing finite groups in PG(2,p)."""

__version__ = "0.1.0"
