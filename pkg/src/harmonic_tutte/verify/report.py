"""Verification reports: both sides of an identity on one instance."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..enums.verify import Identity, Verdict
from ..harmonic.functions import SetFunction
from ..linalg.field_matrix import FieldMatrix
from ..observability.logging import get_logger
from ..poly import BivariatePoly

logger = get_logger(__name__)


@dataclass(frozen=True)
class Instance:
    """Everything needed to replay a check: a matrix, a set function, an optional subset."""

    matrix: FieldMatrix | None = None
    function: SetFunction | None = None
    subset: tuple[int, ...] | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def describe(self) -> str:
        parts = []
        if self.matrix is not None:
            parts.append(f"q={self.matrix.q} n={self.matrix.cols} k={self.matrix.rows}")
        if self.function is not None:
            parts.append(f"d={self.function.d}")
        if self.subset is not None:
            parts.append("J={" + ",".join(map(str, self.subset)) + "}")
        parts.extend(f"{key}={value}" for key, value in self.extra.items())
        return " ".join(parts)


@dataclass(frozen=True)
class VerificationReport:
    identity: Identity
    instance: Instance
    lhs: BivariatePoly
    rhs: BivariatePoly
    exact: bool = True  # False when a side left the rationals (symbolic checks)

    @property
    def diff(self) -> BivariatePoly:
        return self.lhs - self.rhs

    @property
    def verdict(self) -> Verdict:
        return Verdict.EQUAL if self.exact and self.diff.is_zero() else Verdict.MISMATCH

    @property
    def ok(self) -> bool:
        return self.verdict is Verdict.EQUAL


def compare(identity: Identity, instance: Instance, lhs: BivariatePoly, rhs: BivariatePoly, exact: bool = True) -> VerificationReport:
    report = VerificationReport(identity, instance, lhs, rhs, exact)
    if report.ok:
        logger.debug("%s holds on %s", identity.value, instance.describe())
    else:
        logger.warning("%s fails on %s: lhs - rhs = %s", identity.value, instance.describe(), report.diff)
    return report
