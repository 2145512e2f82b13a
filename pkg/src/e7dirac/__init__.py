"""Exact-arithmetic screening pipeline for the Dirac series of E7(-25)."""

__version__ = "0.1.0"
