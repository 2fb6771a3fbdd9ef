"""
Enums package for harmonic-tutte.

    from harmonic_tutte.enums.system import OutputFormat, LogLevel, ExitStatus
    from harmonic_tutte.enums.verify import Identity, Verdict, ErrorCategory, VerifyTarget
"""

from .system import ExitStatus, LogLevel, OutputFormat
from .verify import ErrorCategory, Identity, Verdict, VerifyTarget

__all__ = [
    # System enums
    "ExitStatus",
    "LogLevel",
    "OutputFormat",

    # Verification enums
    "ErrorCategory",
    "Identity",
    "Verdict",
    "VerifyTarget",
]
