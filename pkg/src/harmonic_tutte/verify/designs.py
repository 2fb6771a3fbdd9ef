"""
t-design detection for the supports of codewords.

The supports of the weight-w codewords (with multiplicity) form a t-design
exactly when W_{C,f} vanishes for every f in Harm_d, 1 <= d <= t. Both that
criterion and a direct block count are computed so they can be compared.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from ..codes import LinearCode, codewords, harmonic_distribution, harmonic_weight_enumerator
from ..core.config import resolve_max_n
from ..enums.verify import Identity
from ..harmonic.functions import HarmonicFunction, harm_basis
from ..matroid import harmonic_tutte
from ..observability.logging import get_logger
from ..poly import BivariatePoly
from .report import Instance, VerificationReport, compare

logger = get_logger(__name__)


@dataclass(frozen=True)
class DegreeResult:
    d: int
    basis_size: int
    vanishes: bool
    witness: HarmonicFunction | None = None
    witness_enumerator: BivariatePoly | None = None


@dataclass(frozen=True)
class WeightResult:
    """Both criteria for the blocks of one weight; ``lam`` is the strength-t count when constant."""

    weight: int
    blocks: int
    harmonic: bool
    oracle: bool
    lam: int | None

    @property
    def agree(self) -> bool:
        return self.harmonic == self.oracle


@dataclass(frozen=True)
class DesignReport:
    n: int
    t: int
    degrees: list[DegreeResult] = field(default_factory=list)
    weights: list[WeightResult] = field(default_factory=list)
    matroid_vanishes: bool | None = None

    @property
    def harmonic_design(self) -> bool:
        return all(r.vanishes for r in self.degrees)

    @property
    def oracle_design(self) -> bool:
        return all(w.oracle for w in self.weights)

    @property
    def agree(self) -> bool:
        return self.harmonic_design == self.oracle_design and all(w.agree for w in self.weights)

    @property
    def implication_holds(self) -> bool | None:
        """T(M_C, f) = 0 for all f must force a design; None when the matroid side was skipped."""
        if self.matroid_vanishes is None:
            return None
        return not self.matroid_vanishes or self.harmonic_design


def block_multiset(code: LinearCode, max_words: int | None = None) -> dict[int, Counter]:
    """Supports of the nonzero codewords, with multiplicity, grouped by weight."""
    out: dict[int, Counter] = {}
    for word in codewords(code, max_words):
        if word.weight:
            out.setdefault(word.weight, Counter())[word.support] += 1
    return out


def containment_counts(blocks: Counter, n: int, s: int) -> set[int]:
    """The distinct numbers of blocks containing an s-subset of {1..n}."""
    counts = Counter()
    for support, mult in blocks.items():
        for sub in combinations(support, s):
            counts[sub] += mult
    values = set(counts.values())
    if len(counts) < comb(n, s):
        values.add(0)
    return values


def is_design(blocks: Counter, n: int, t: int) -> tuple[bool, int | None]:
    """
    Every s-subset, 1 <= s <= t, lies in the same number of blocks; returns the
    count at the largest s checked. Strengths above n have no s-subsets and hold
    vacuously, matching an empty Harm_d for d > n/2.
    """
    lam = None
    for s in range(1, min(t, n) + 1):
        values = containment_counts(blocks, n, s)
        if len(values) != 1:
            return False, None
        lam = values.pop()
    return True, lam


def design_check(code: LinearCode, t: int, max_n: int | None = None, max_words: int | None = None) -> DesignReport:
    if t < 1:
        raise ValueError("design strength t must be at least 1")
    n = code.n
    bases = {d: harm_basis(n, d) for d in range(1, min(t, n) + 1)}

    degrees = []
    per_weight_zero: dict[int, bool] = {}
    for d, basis in bases.items():
        witness = None
        for f in basis:
            a_f = harmonic_distribution(code, f, max_words)
            for w, value in a_f.items():
                per_weight_zero[w] = per_weight_zero.get(w, True) and value == 0
            if witness is None and any(a_f.values()):
                witness = (f, harmonic_weight_enumerator(code, f, max_words))
        degrees.append(
            DegreeResult(
                d=d,
                basis_size=len(basis),
                vanishes=witness is None,
                witness=witness[0] if witness else None,
                witness_enumerator=witness[1] if witness else None,
            )
        )
        logger.debug("degree %d: %d basis functions, vanishing=%s", d, len(basis), witness is None)

    weights = []
    for w, blocks in sorted(block_multiset(code, max_words).items()):
        oracle, lam = is_design(blocks, n, t)
        weights.append(
            WeightResult(
                weight=w,
                blocks=sum(blocks.values()),
                harmonic=per_weight_zero.get(w, True),
                oracle=oracle,
                lam=lam,
            )
        )

    matroid_vanishes = None
    if n <= resolve_max_n(max_n):
        matroid_vanishes = all(
            harmonic_tutte(code.matroid, f, max_n=max_n).is_zero() for basis in bases.values() for f in basis
        )

    report = DesignReport(n=n, t=t, degrees=degrees, weights=weights, matroid_vanishes=matroid_vanishes)
    if not report.agree:
        logger.warning("harmonic criterion and block count disagree for %r, t=%d", code, t)
    return report


def verify_design_agreement(code: LinearCode, t: int, max_n: int | None = None, max_words: int | None = None) -> VerificationReport:
    """
    Per-weight flags as x^w coefficients plus the whole-code flag on y:
    harmonic criterion on the left, block count on the right.
    """
    report = design_check(code, t, max_n=max_n, max_words=max_words)
    lhs = BivariatePoly.univariate({w.weight: int(w.harmonic) for w in report.weights})
    rhs = BivariatePoly.univariate({w.weight: int(w.oracle) for w in report.weights})
    lhs = lhs + BivariatePoly.monomial(int(report.harmonic_design), 0, 1)
    rhs = rhs + BivariatePoly.monomial(int(report.oracle_design), 0, 1)
    return compare(Identity.DESIGN_AGREEMENT, Instance(code.generator, extra={"t": t}), lhs, rhs)
