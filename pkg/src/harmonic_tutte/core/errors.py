"""
Exception hierarchy.

Every error carries an ``ErrorCategory`` so the CLI can map it to an exit status
without inspecting messages.
"""
from ..enums.verify import ErrorCategory


class HarmonicTutteError(Exception):
    """Base class for all library errors."""
    category: ErrorCategory = ErrorCategory.VALIDATION


class InvalidFieldError(HarmonicTutteError, ValueError):
    """The field modulus is not a prime."""


class MatrixFormatError(HarmonicTutteError, ValueError):
    """A matrix file or matrix literal is malformed."""
    category = ErrorCategory.IO


class SubsetError(HarmonicTutteError, ValueError):
    """A subset or column index lies outside the ground set."""


class EnumerationCapError(HarmonicTutteError):
    """An exhaustive enumeration would exceed the configured cap."""
    category = ErrorCategory.LIMIT

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: {size} exceeds the configured cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class GroundSizeMismatchError(HarmonicTutteError, ValueError):
    """A set function and a matroid or code disagree on the ground set size."""

    def __init__(self, expected: int, actual: int):
        super().__init__(f"ground set size mismatch: expected n={expected}, got n={actual}")
        self.expected = expected
        self.actual = actual


class NotHarmonicError(HarmonicTutteError, ValueError):
    """A set function is not in the kernel of gamma."""

    def __init__(self, row: tuple[int, ...], value: object):
        shown = "{" + ",".join(str(e) for e in row) + "}"
        super().__init__(f"not harmonic: (gamma f)({shown}) = {value}, expected 0")
        self.row = row
        self.value = value


class NotDivisibleError(HarmonicTutteError, ArithmeticError):
    """A polynomial is not divisible by the requested power of xy."""
    category = ErrorCategory.CONSISTENCY


class HarmonicFileError(HarmonicTutteError, ValueError):
    """A harmonic function file is malformed."""
    category = ErrorCategory.IO
