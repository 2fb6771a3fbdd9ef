"""Command line surface: ``htutte``. The click group lives in ``cli.main``."""
from .dtos import RunConfig

__all__ = ["RunConfig"]
