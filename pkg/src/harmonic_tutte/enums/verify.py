"""
Verification-related enumerations: identity names, verdicts and error categories.
"""

from enum import Enum


class Identity(str, Enum):
    """Enumeration of checkable identities."""
    DUALITY = "duality"
    GREENE = "greene"
    GREENE_POINTWISE = "greene-pointwise"
    MACWILLIAMS = "macwilliams"
    MACWILLIAMS_CLASSICAL = "macwilliams-classical"
    SQRT2_REDUCTION = "sqrt2-reduction"
    BTF = "btf"
    REINTERPRETATION = "reinterpretation"
    LEMMA_SLICES = "lemma-slices"
    TILDE_SUMS = "tilde-sums"
    SHORTENING_TUTTE = "shortening-tutte"
    ORACLE_EQUIVALENCE = "oracle-equivalence"
    HARM_DIMENSION = "harm-dimension"
    DESIGN_AGREEMENT = "design-agreement"


class Verdict(str, Enum):
    """Enumeration of verification verdicts."""
    EQUAL = "equal"
    MISMATCH = "mismatch"


class ErrorCategory(str, Enum):
    """Enumeration of error categories."""
    VALIDATION = "validation"
    LIMIT = "limit"
    CONSISTENCY = "consistency"
    IO = "io"


class VerifyTarget(str, Enum):
    """Enumeration of names accepted by the ``verify`` command."""
    DUALITY = "duality"
    GREENE = "greene"
    MACWILLIAMS = "macwilliams"
    BTF = "btf"
    REINTERPRETATION = "reinterpretation"
    LEMMA_SLICES = "lemma-slices"
    ALL = "all"
