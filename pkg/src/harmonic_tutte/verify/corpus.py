"""
Seeded random corpus and the self-test harness.

Every identity draws from its own generator, seeded with (seed, position of the
identity), so each result depends only on the seed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from ..codes import LinearCode
from ..constants import (
    CORPUS_PROFILES,
    DEFAULT_CORPUS_SIZE,
    DEFAULT_GREENE_POINTS,
    DEFAULT_LEMMA_TRIPLES,
    DEFAULT_ORACLE_MATROIDS,
)
from ..enums.verify import Identity
from ..harmonic.functions import HarmonicFunction, harm_basis
from ..linalg.field_matrix import FieldMatrix, rref
from ..matroid import VectorMatroid
from ..observability.logging import get_logger
from ..utils.helpers import mask_to_subset
from .designs import verify_design_agreement
from .identities import (
    verify_btf,
    verify_duality,
    verify_greene,
    verify_greene_pointwise,
    verify_harm_dimension,
    verify_lemma_slices,
    verify_macwilliams_classical,
    verify_macwilliams_harmonic,
    verify_oracle_equivalence,
    verify_reinterpretation,
    verify_shortening_tutte,
    verify_sqrt2_reduction,
    verify_tilde_sums,
)
from .report import VerificationReport

logger = get_logger(__name__)


def random_generator(rng: np.random.Generator, q: int, n: int, k: int) -> FieldMatrix:
    """A uniformly drawn k x n matrix over F_q of full row rank."""
    if k > n:
        raise ValueError(f"cannot have {k} independent rows of length {n}")
    while True:
        m = FieldMatrix.from_rows(q, rng.integers(0, q, size=(k, n)).tolist(), cols=n)
        if rref(m).rank == k:
            return m


def random_code(rng: np.random.Generator, q: int, n: int) -> LinearCode:
    k = int(rng.integers(0, n + 1))
    return LinearCode(random_generator(rng, q, n, k))


def random_harmonic(rng: np.random.Generator, n: int, d: int) -> HarmonicFunction:
    """One element of the canonical basis of Harm_d, chosen uniformly."""
    basis = harm_basis(n, d)
    return basis[int(rng.integers(0, len(basis)))]


@dataclass(frozen=True)
class CorpusInstance:
    """A drawn code with the whole canonical basis of Harm_d on its ground set."""

    code: LinearCode
    functions: tuple[HarmonicFunction, ...]

    @property
    def d(self) -> int:
        return self.functions[0].d

    def pairs(self) -> Iterator[tuple[LinearCode, HarmonicFunction]]:
        for f in self.functions:
            yield self.code, f


def draw_instances(rng: np.random.Generator, profile: str, count: int) -> Iterator[CorpusInstance]:
    """
    Instances for one profile of ``CORPUS_PROFILES``; n >= 1 and
    0 <= d <= min(max_d, n/2). Every element of the drawn basis is checked.
    """
    shape = CORPUS_PROFILES[profile]
    qs, max_n, max_d = shape["qs"], shape["max_n"], shape["max_d"]
    for _ in range(count):
        q = int(qs[int(rng.integers(0, len(qs)))])
        n = int(rng.integers(1, max_n + 1))
        d = int(rng.integers(0, min(max_d, n // 2) + 1))
        yield CorpusInstance(random_code(rng, q, n), harm_basis(n, d))


@dataclass
class IdentityResult:
    identity: Identity
    checked: int = 0
    failures: list[VerificationReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, report: VerificationReport) -> None:
        self.checked += 1
        if not report.ok:
            self.failures.append(report)


@dataclass
class SelftestSummary:
    seed: int
    results: list[IdentityResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def checked(self) -> int:
        return sum(r.checked for r in self.results)


@dataclass(frozen=True)
class CorpusOptions:
    corpus_size: int = DEFAULT_CORPUS_SIZE
    lemma_triples: int = DEFAULT_LEMMA_TRIPLES
    greene_points: int = DEFAULT_GREENE_POINTS
    oracle_matroids: int = DEFAULT_ORACLE_MATROIDS
    max_n: int | None = None
    max_words: int | None = None


Runner = Callable[[np.random.Generator, CorpusOptions], Iterator[VerificationReport]]


def _pairs(rng, profile, count):
    for inst in draw_instances(rng, profile, count):
        yield from inst.pairs()


def _duality(rng, opts):
    for code, f in _pairs(rng, "duality", opts.corpus_size):
        yield verify_duality(code.matroid, f, max_n=opts.max_n)


def _greene(rng, opts):
    for code, f in _pairs(rng, "greene", opts.corpus_size):
        yield verify_greene(code, f, opts.max_n, opts.max_words)
    for code, f in _pairs(rng, "greene-fq", max(opts.corpus_size // 2, 1)):
        yield verify_greene(code, f, opts.max_n, opts.max_words)


def _greene_pointwise(rng, opts):
    for code, f in _pairs(rng, "greene", max(opts.corpus_size // 20, 1)):
        yield verify_greene_pointwise(code, f, opts.greene_points, rng, max_n=opts.max_n)


def _macwilliams(rng, opts):
    for code, f in _pairs(rng, "macwilliams", opts.corpus_size):
        yield verify_macwilliams_harmonic(code, f, opts.max_words)
    for code, f in _pairs(rng, "macwilliams-fq", max(opts.corpus_size // 4, 1)):
        yield verify_macwilliams_harmonic(code, f, opts.max_words)


def _macwilliams_classical(rng, opts):
    for inst in draw_instances(rng, "duality", max(opts.corpus_size // 4, 1)):
        yield verify_macwilliams_classical(inst.code, opts.max_words)


def _sqrt2(rng, opts):
    for code, f in _pairs(rng, "macwilliams", max(opts.corpus_size // 10, 1)):
        yield verify_sqrt2_reduction(code, f, opts.max_words)


def _btf(rng, opts):
    for code, f in _pairs(rng, "btf", opts.corpus_size):
        yield verify_btf(code, f, opts.max_n, opts.max_words)


def _reinterpretation(rng, opts):
    for code, f in _pairs(rng, "reinterpretation", opts.corpus_size):
        yield verify_reinterpretation(code, f, opts.max_n, opts.max_words)


def _lemma_slices(rng, opts):
    for _ in range(opts.lemma_triples):
        n = int(rng.integers(1, 11))
        d = int(rng.integers(0, min(3, n // 2) + 1))
        f = random_harmonic(rng, n, d)
        yield verify_lemma_slices(f, mask_to_subset(int(rng.integers(0, 1 << n))))


def _tilde_sums(rng, opts):
    for _, f in _pairs(rng, "duality", max(opts.corpus_size // 4, 1)):
        yield verify_tilde_sums(f)


def _shortening(rng, opts):
    for code, f in _pairs(rng, "btf", max(opts.corpus_size // 4, 1)):
        yield verify_shortening_tutte(code, f, max_n=opts.max_n)


def _oracle(rng, opts):
    for _ in range(opts.oracle_matroids):
        q = int(rng.choice([2, 3, 5]))
        n = int(rng.integers(1, 9))
        m = VectorMatroid(random_generator(rng, q, n, int(rng.integers(0, n + 1))))
        d = int(rng.integers(0, min(3, n // 2) + 1))
        yield verify_oracle_equivalence(m, random_harmonic(rng, n, d), max_n=opts.max_n)


def _harm_dimension(rng, opts):
    for n in range(1, 11):
        for d in range(1, (n + 1) // 2 + 1):
            yield verify_harm_dimension(n, d)


def _designs(rng, opts):
    for _ in range(max(opts.corpus_size // 4, 1)):
        n = int(rng.integers(1, 11))
        code = random_code(rng, 2, n)
        yield verify_design_agreement(code, int(rng.integers(1, 4)), opts.max_n, opts.max_words)


SELFTEST_PLAN: tuple[tuple[Identity, Runner], ...] = (
    (Identity.DUALITY, _duality),
    (Identity.GREENE, _greene),
    (Identity.GREENE_POINTWISE, _greene_pointwise),
    (Identity.MACWILLIAMS, _macwilliams),
    (Identity.MACWILLIAMS_CLASSICAL, _macwilliams_classical),
    (Identity.SQRT2_REDUCTION, _sqrt2),
    (Identity.BTF, _btf),
    (Identity.REINTERPRETATION, _reinterpretation),
    (Identity.LEMMA_SLICES, _lemma_slices),
    (Identity.TILDE_SUMS, _tilde_sums),
    (Identity.SHORTENING_TUTTE, _shortening),
    (Identity.ORACLE_EQUIVALENCE, _oracle),
    (Identity.HARM_DIMENSION, _harm_dimension),
    (Identity.DESIGN_AGREEMENT, _designs),
)


def run_selftest(
    seed: int,
    options: CorpusOptions | None = None,
    identities: set[Identity] | None = None,
) -> SelftestSummary:
    """Runs every identity of the plan (or the chosen subset) on its seeded corpus."""
    options = options or CorpusOptions()
    summary = SelftestSummary(seed=seed)
    for position, (identity, runner) in enumerate(SELFTEST_PLAN):
        if identities is not None and identity not in identities:
            continue
        rng = np.random.default_rng([seed, position])
        result = IdentityResult(identity)
        for report in runner(rng, options):
            result.record(report)
        logger.info("%s: %d checked, %d failed", identity.value, result.checked, len(result.failures))
        summary.results.append(result)
    return summary
