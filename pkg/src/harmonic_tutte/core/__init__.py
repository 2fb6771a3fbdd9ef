"""Core package: settings and the error hierarchy."""
from .config import Settings, get_settings
from .errors import HarmonicTutteError

__all__ = ["HarmonicTutteError", "Settings", "get_settings"]
