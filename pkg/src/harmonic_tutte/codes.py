"""
Linear codes over prime fields and their (harmonic) weight enumerators.

W_{C,f}(x, y) = sum over codewords u of f~(supp u) x^(n - wt u) y^(wt u)
             = (xy)^d Z_{C,f}(x, y).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Iterable, Iterator

import numpy as np

from .core.config import resolve_max_words
from .core.errors import EnumerationCapError
from .harmonic.functions import HarmonicFunction, SetFunction, TildeTable, tilde
from .harmonic.subsets import as_subset
from .linalg.field_matrix import FieldMatrix, column_rank, null_space, row_basis
from .matroid import VectorMatroid, check_subset_cap
from .observability.logging import get_logger
from .poly import BivariatePoly, expand_shifted_term, from_shifted_counts
from .utils.helpers import exact_dtype, popcounts

logger = get_logger(__name__)

WORD_BATCH = 1 << 15
# Codes at most this large keep their codeword weights and supports
SUPPORT_CACHE_WORDS = 1 << 16


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An [n, k] code over F_q given by a full-row-rank generator matrix."""

    generator: FieldMatrix

    @classmethod
    def from_generator(cls, m: FieldMatrix) -> LinearCode:
        """Span of the rows of m; dependent rows are eliminated."""
        return cls(row_basis(m))

    @property
    def q(self) -> int:
        return self.generator.q

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def size(self) -> int:
        return self.q ** self.k

    @cached_property
    def matroid(self) -> VectorMatroid:
        """M_C, the vector matroid of the generator matrix."""
        return VectorMatroid(self.generator)

    @cached_property
    def dual(self) -> LinearCode:
        """C-perp, generated by the null space of the generator."""
        return LinearCode(null_space(self.generator))

    @cached_property
    def supports(self) -> tuple[np.ndarray, np.ndarray]:
        """Weights and support bitmasks of every codeword, in enumeration order."""
        weights, masks = zip(*(_support_masks(batch) for batch in _word_batches(self, self.size)))
        return np.concatenate(weights), np.concatenate(masks)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over F_{self.q})"


@dataclass(frozen=True)
class Codeword:
    entries: tuple[int, ...]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j + 1 for j, v in enumerate(self.entries) if v)

    @property
    def weight(self) -> int:
        return sum(1 for v in self.entries if v)


@dataclass(frozen=True)
class EnumeratorTable:
    """Weight distribution A_i, harmonic coefficients A_{i,f} and the table B_{t,f}."""

    n: int
    d: int
    a: dict[int, int]
    a_f: dict[int, Fraction]
    b_f: dict[int, Fraction] = field(default_factory=dict)


def _check_words(code: LinearCode, max_words: int | None) -> None:
    cap = resolve_max_words(max_words)
    if code.size > cap:
        raise EnumerationCapError("codeword enumeration q^k", code.size, cap)


def _word_batches(code: LinearCode, max_words: int | None) -> Iterator[np.ndarray]:
    """All codewords, as arrays of shape (batch, n); messages in base-q counting order."""
    _check_words(code, max_words)
    q, k, n = code.q, code.k, code.n
    if k == 0:
        yield np.zeros((1, n), dtype=np.int64)
        return
    powers = q ** np.arange(k, dtype=np.int64)
    dtype = exact_dtype(k * q * q)
    generator = code.generator.entries.astype(dtype)
    for start in range(0, code.size, WORD_BATCH):
        index = np.arange(start, min(start + WORD_BATCH, code.size), dtype=np.int64)
        messages = (index[:, None] // powers) % q
        yield ((messages.astype(dtype) @ generator) % q).astype(np.int64)


def codewords(code: LinearCode, max_words: int | None = None) -> Iterator[Codeword]:
    """Every codeword exactly once."""
    for batch in _word_batches(code, max_words):
        for row in batch:
            yield Codeword(tuple(int(v) for v in row))


def _support_masks(batch: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    nonzero = batch != 0
    bits = np.int64(1) << np.arange(batch.shape[1], dtype=np.int64)
    return nonzero.sum(axis=1), (nonzero * bits).sum(axis=1)


def _support_batches(code: LinearCode, max_words: int | None) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    _check_words(code, max_words)
    if code.size <= SUPPORT_CACHE_WORDS:
        yield code.supports
        return
    for batch in _word_batches(code, max_words):
        yield _support_masks(batch)


def dual_code(code: LinearCode) -> LinearCode:
    """C-perp; computed once per code."""
    return code.dual


def weight_distribution(code: LinearCode, max_words: int | None = None) -> dict[int, int]:
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for weights, _ in _support_batches(code, max_words):
        counts += np.bincount(weights, minlength=code.n + 1)
    return {i: int(c) for i, c in enumerate(counts)}


def harmonic_distribution(code: LinearCode, f: SetFunction, max_words: int | None = None) -> dict[int, Fraction]:
    """A_{i,f}: the sum of f~(supp u) over codewords u of weight i."""
    f.require_ground_size(code.n)
    _check_words(code, max_words)
    logger.debug("summing f~ over %d codewords of %r", code.size, code)
    if code.n <= 24:
        table = TildeTable(f)
        acc = np.zeros(code.n + 1, dtype=exact_dtype((table.bound + 1) * code.size))
        for weights, masks in _support_batches(code, max_words):
            np.add.at(acc, weights, table.numerators[masks])
        return {i: Fraction(int(v), table.denominator) for i, v in enumerate(acc)}
    totals = {i: Fraction(0) for i in range(code.n + 1)}
    for word in codewords(code, max_words):
        totals[word.weight] += tilde(f, word.support)
    return totals


def weight_enumerator(code: LinearCode, max_words: int | None = None) -> BivariatePoly:
    """W_C(x, y) = sum of A_i x^(n-i) y^i."""
    n = code.n
    return BivariatePoly({(n - i, i): a for i, a in weight_distribution(code, max_words).items()})


def harmonic_weight_enumerator(code: LinearCode, f: HarmonicFunction, max_words: int | None = None) -> BivariatePoly:
    """W_{C,f}(x, y) = sum of A_{i,f} x^(n-i) y^i."""
    n = code.n
    return BivariatePoly({(n - i, i): a for i, a in harmonic_distribution(code, f, max_words).items()})


def zeta(code: LinearCode, f: HarmonicFunction, max_words: int | None = None) -> BivariatePoly:
    """Z_{C,f} = W_{C,f} / (xy)^d, homogeneous of degree n - 2d unless zero."""
    return harmonic_weight_enumerator(code, f, max_words).divide_by_xy_power(f.d)


def shortened_dimension(code: LinearCode, subset: Iterable[int]) -> int:
    """l(J) = dim C(J) = k - rho(J)."""
    return code.k - column_rank(code.generator, as_subset(subset, code.n))


def shortening_data(code: LinearCode, subset: Iterable[int]) -> tuple[int, int]:
    """(l(J), B_J) with B_J = q^l(J) - 1, the number of nonzero codewords vanishing on J."""
    ell = shortened_dimension(code, subset)
    return ell, code.q ** ell - 1


def shortened_size_bruteforce(code: LinearCode, subset: Iterable[int], max_words: int | None = None) -> int:
    """|C(J)| by enumeration; the oracle for ``shortening_data``."""
    idx = [j - 1 for j in as_subset(subset, code.n)]
    total = 0
    for batch in _word_batches(code, max_words):
        total += int((batch[:, idx] == 0).all(axis=1).sum()) if idx else batch.shape[0]
    return total


def b_table(code: LinearCode, f: HarmonicFunction, max_n: int | None = None) -> dict[int, Fraction]:
    """B_{t,f} = sum over J in E_t of f~(J) B_J, for 0 <= t <= n."""
    f.require_ground_size(code.n)
    check_subset_cap(code.n, max_n)
    n, q, k = code.n, code.q, code.k
    table = TildeTable(f)
    ranks = code.matroid.subset_ranks
    sizes = popcounts(n)
    shortened = np.array([q**ell - 1 for ell in range(k + 1)], dtype=object)[k - ranks]
    acc = np.zeros(n + 1, dtype=object)
    np.add.at(acc, sizes, table.numerators.astype(object) * shortened)
    return {t: Fraction(int(acc[t]), table.denominator) for t in range(n + 1)}


def tilde_level_sums(f: SetFunction) -> dict[int, Fraction]:
    """S_t = sum over J in E_t of f~(J); zero for d >= 1, C(n, t) for the constant function."""
    table = TildeTable(f)
    acc = np.zeros(f.n + 1, dtype=object)
    np.add.at(acc, popcounts(f.n), table.numerators.astype(object))
    return {t: Fraction(int(acc[t]), table.denominator) for t in range(f.n + 1)}


def b_from_a(a_f: dict[int, Fraction], n: int, d: int) -> dict[int, Fraction]:
    """
    (-1)^d sum_{i} C(n-d-i, t-d) A_{i,f} for d <= t <= n-d, else 0.

    The sum runs over nonzero codewords (i >= max(d, 1)), matching B_J = q^l - 1.
    """
    sign = (-1) ** d
    out = {}
    for t in range(n + 1):
        if d <= t <= n - d:
            out[t] = sign * sum(
                (comb(n - d - i, t - d) * a_f.get(i, Fraction(0)) for i in range(max(d, 1), n - t + 1)),
                Fraction(0),
            )
        else:
            out[t] = Fraction(0)
    return out


def zeta_from_b(code: LinearCode, f: HarmonicFunction, max_n: int | None = None) -> BivariatePoly:
    """
    (-1)^d sum_{t=d}^{n-d} (B_{t,f} + S_t) (x-y)^(t-d) y^(n-t-d).

    S_t vanishes for d >= 1; for the constant function it restores the zero
    codeword, which B_J = q^l - 1 leaves out.
    """
    n, d = code.n, f.d
    b = b_table(code, f, max_n=max_n)
    level = tilde_level_sums(f)
    sign = (-1) ** d
    total = BivariatePoly.zero()
    for t in range(d, n - d + 1):
        total = total + expand_shifted_term(sign * (b[t] + level[t]), t - d, n - t - d)
    return total


def enumerator_table(code: LinearCode, f: HarmonicFunction, max_n: int | None = None, max_words: int | None = None) -> EnumeratorTable:
    return EnumeratorTable(
        n=code.n,
        d=f.d,
        a=weight_distribution(code, max_words),
        a_f=harmonic_distribution(code, f, max_words),
        b_f=b_table(code, f, max_n=max_n),
    )


def harmonic_tutte_from_shortening(code: LinearCode, f: HarmonicFunction, max_n: int | None = None) -> BivariatePoly:
    """
    T(M_C, f; x, y) written through l(J) = k - rho(J):
    sum over d <= |J| <= n-d of f~(J) (x-1)^l(J) (y-1)^(l(J) - (k - |J|)).
    """
    f.require_ground_size(code.n)
    check_subset_cap(code.n, max_n)
    n, k, d = code.n, code.k, f.d
    if d > n - d:
        return BivariatePoly.zero()
    table = TildeTable(f)
    sizes = popcounts(n)
    ells = k - code.matroid.subset_ranks
    keep = (sizes >= d) & (sizes <= n - d)
    counts = np.zeros((k + 1, n - k + 1), dtype=object)
    np.add.at(counts, (ells[keep], (ells - (k - sizes))[keep]), table.numerators[keep].astype(object))
    return from_shifted_counts(counts, -1, -1, table.denominator)


__all__ = [
    "Codeword",
    "EnumeratorTable",
    "LinearCode",
    "b_from_a",
    "b_table",
    "codewords",
    "dual_code",
    "enumerator_table",
    "harmonic_distribution",
    "harmonic_tutte_from_shortening",
    "harmonic_weight_enumerator",
    "shortened_dimension",
    "shortened_size_bruteforce",
    "shortening_data",
    "tilde_level_sums",
    "weight_distribution",
    "weight_enumerator",
    "zeta",
    "zeta_from_b",
]
