import logging
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
JSON_LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


def setup_logging(level: int = logging.WARNING, json: bool = False, fmt: Optional[str] = None) -> None:
    """Configure logging for the application; stdout is left to command output."""
    root = logging.getLogger()
    root.setLevel(level)
    if root.handlers:
        # Avoid configuring logging multiple times in tests / repeated CLI invocations
        return
    handler = logging.StreamHandler(sys.stderr)
    if json:
        handler.setFormatter(jsonlogger.JsonFormatter(fmt or JSON_LOG_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(fmt or LOG_FORMAT))
    root.addHandler(handler)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
