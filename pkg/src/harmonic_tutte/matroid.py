"""
Vector matroids and their (weighted) Tutte polynomials.

T(M, f; x, y) = sum over J of f~(J) (x-1)^(rho(E)-rho(J)) (y-1)^(|J|-rho(J)).
The classical Tutte polynomial is the case f = 1 on the empty set (degree 0).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np

from .core.config import resolve_max_n
from .core.errors import EnumerationCapError
from .harmonic.functions import HarmonicFunction, SetFunction, TildeTable, constant_function, tilde
from .harmonic.subsets import as_subset, complement
from .linalg.field_matrix import FieldMatrix, column_rank, null_space, subset_ranks
from .observability.logging import get_logger
from .poly import BivariatePoly, from_shifted_counts
from .utils.helpers import exact_dtype, mask_to_subset, popcounts

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class VectorMatroid:
    """The matroid on E = {1..n} whose independent sets are independent column sets."""

    representation: FieldMatrix

    @property
    def ground_size(self) -> int:
        return self.representation.cols

    @cached_property
    def rank_full(self) -> int:
        return column_rank(self.representation, range(1, self.ground_size + 1))

    @cached_property
    def subset_ranks(self) -> np.ndarray:
        """rho of every subset, indexed by bitmask. Not shared across threads."""
        return subset_ranks(self.representation)

    @cached_property
    def dual_matroid(self) -> VectorMatroid:
        return VectorMatroid(null_space(self.representation))

    def __repr__(self) -> str:
        return f"VectorMatroid(n={self.ground_size}, rank={self.rank_full}, q={self.representation.q})"


def rank(m: VectorMatroid, subset: Iterable[int]) -> int:
    """rho(J), the column rank of the representation on J."""
    return column_rank(m.representation, as_subset(subset, m.ground_size))


def dual(m: VectorMatroid) -> VectorMatroid:
    """The dual matroid, represented by the null space of the representation."""
    return m.dual_matroid


def dual_rank(m: VectorMatroid, subset: Iterable[int]) -> int:
    """rho_dual(J) = |J| + rho(E \\ J) - rho(E)."""
    members = as_subset(subset, m.ground_size)
    return len(members) + rank(m, complement(members, m.ground_size)) - m.rank_full


def check_subset_cap(n: int, max_n: int | None) -> None:
    cap = resolve_max_n(max_n)
    if n > cap:
        raise EnumerationCapError("subset enumeration over ground set size n", n, cap)


def _corank_nullity_sum(m: VectorMatroid, table: TildeTable, lo: int, hi: int) -> BivariatePoly:
    n, r = m.ground_size, m.rank_full
    ranks = m.subset_ranks
    sizes = popcounts(n)
    keep = (sizes >= lo) & (sizes <= hi)
    weights = table.numerators[keep]
    coranks = (r - ranks)[keep]
    nullities = (sizes - ranks)[keep]
    counts = np.zeros((r + 1, n - r + 1), dtype=exact_dtype((table.bound + 1) << n))
    np.add.at(counts, (coranks, nullities), weights)
    logger.debug("accumulated %d of %d subsets for a rank-%d matroid", int(keep.sum()), 1 << n, r)
    return from_shifted_counts(counts, -1, -1, table.denominator)


def weighted_tutte(m: VectorMatroid, f: SetFunction, max_n: int | None = None) -> BivariatePoly:
    """The Tutte sum with each subset J weighted by f~(J), for any set function f."""
    f.require_ground_size(m.ground_size)
    check_subset_cap(m.ground_size, max_n)
    return _corank_nullity_sum(m, TildeTable(f), 0, m.ground_size)


def harmonic_tutte(m: VectorMatroid, f: HarmonicFunction, max_n: int | None = None) -> BivariatePoly:
    """T(M, f; x, y) for f in Harm_d; only d <= |J| <= n - d can contribute."""
    f.require_ground_size(m.ground_size)
    check_subset_cap(m.ground_size, max_n)
    n, d = m.ground_size, f.d
    if d > n - d:
        return BivariatePoly.zero()
    return _corank_nullity_sum(m, TildeTable(f), d, n - d)


def tutte(m: VectorMatroid, max_n: int | None = None) -> BivariatePoly:
    """The classical Tutte polynomial T(M; x, y)."""
    return harmonic_tutte(m, constant_function(m.ground_size), max_n=max_n)


def weighted_tutte_naive(m: VectorMatroid, f: SetFunction, max_n: int | None = None) -> BivariatePoly:
    """
    Reference implementation: re-ranks every subset from scratch and expands
    each term separately. Used as an oracle for the cached computation.
    """
    f.require_ground_size(m.ground_size)
    check_subset_cap(m.ground_size, max_n)
    n = m.ground_size
    r = column_rank(m.representation, range(1, n + 1))
    x1 = BivariatePoly.x() - 1
    y1 = BivariatePoly.y() - 1
    total = BivariatePoly.zero()
    for mask in range(1 << n):
        subset = mask_to_subset(mask)
        weight = tilde(f, subset)
        if not weight:
            continue
        rho = column_rank(m.representation, subset)
        total = total + (x1 ** (r - rho) * y1 ** (len(subset) - rho)).scale(weight)
    return total


def tutte_naive(m: VectorMatroid, max_n: int | None = None) -> BivariatePoly:
    return weighted_tutte_naive(m, constant_function(m.ground_size), max_n=max_n)


def count_bases(m: VectorMatroid) -> int:
    """Number of bases by brute force over all rho(E)-subsets."""
    n, r = m.ground_size, m.rank_full
    return sum(1 for cols in combinations(range(1, n + 1), r) if column_rank(m.representation, cols) == r)
