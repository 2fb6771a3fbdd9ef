"""Exact Tutte polynomials, harmonic weight enumerators and their identities."""

from .constants import APP_NAME, APP_VERSION

__all__ = ["APP_NAME", "APP_VERSION"]
__version__ = APP_VERSION
