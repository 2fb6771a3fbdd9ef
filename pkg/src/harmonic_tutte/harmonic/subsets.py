"""d-subsets of the ground set E = {1..n}, as sorted 1-based tuples."""
from __future__ import annotations

from itertools import combinations
from typing import Iterable

from ..core.errors import SubsetError

KSubset = tuple[int, ...]


def enumerate_subsets(n: int, d: int) -> list[KSubset]:
    """All C(n, d) subsets of size d in lexicographic order."""
    if n < 0 or not 0 <= d <= n:
        raise SubsetError(f"subset size {d} outside 0..{n}")
    return list(combinations(range(1, n + 1), d))


def as_subset(elements: Iterable[int], n: int) -> KSubset:
    """Validate and normalise a subset of {1..n}."""
    raw = [int(e) for e in elements]
    items = tuple(sorted(set(raw)))
    if len(items) != len(raw):
        raise SubsetError(f"repeated elements in {list(raw)}")
    if items and (items[0] < 1 or items[-1] > n):
        raise SubsetError(f"subset {list(items)} not contained in 1..{n}")
    return items


def complement(subset: Iterable[int], n: int) -> KSubset:
    members = set(subset)
    return tuple(e for e in range(1, n + 1) if e not in members)
