"""
System-related enumerations: output formats, logging levels and exit statuses.
"""

import logging
from enum import Enum


class OutputFormat(str, Enum):
    """Enumeration of output formats."""
    HUMAN = "human"
    JSON_LINES = "json-lines"


class LogLevel(str, Enum):
    """Enumeration of logging levels."""
    DEBUG = "debug"
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"
    CRITICAL = "critical"

    def to_logging(self) -> int:
        return getattr(logging, self.name)


class ExitStatus(int, Enum):
    """Enumeration of process exit statuses."""
    OK = 0
    MISMATCH = 1
    USAGE = 2
    VALIDATION = 3
    LIMIT = 4
    CONSISTENCY = 5
    IO = 6
