"""
Set functions on E_d, the differentiation operator gamma, and Harm_d.

A degree-d set function f assigns a rational value to each d-subset of
E = {1..n}. Its extension to an arbitrary X is the sum of f over the
d-subsets contained in X (containment is non-strict, so X itself counts
when |X| = d).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from typing import Iterable, Mapping, Sequence

import numpy as np

from ..core.errors import GroundSizeMismatchError, NotHarmonicError, SubsetError
from ..linalg.rational import RationalMatrix, rational_kernel
from ..observability.logging import get_logger
from ..utils.helpers import exact_dtype, subset_to_mask
from .subsets import KSubset, as_subset, enumerate_subsets

logger = get_logger(__name__)


@dataclass(frozen=True)
class SetFunction:
    """f : E_d -> Q; missing subsets map to 0."""

    n: int
    d: int
    values: Mapping[KSubset, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n < 0 or not 0 <= self.d <= self.n:
            raise SubsetError(f"degree {self.d} outside 0..{self.n}")
        clean: dict[KSubset, Fraction] = {}
        for key, value in self.values.items():
            subset = as_subset(key, self.n)
            if len(subset) != self.d:
                raise SubsetError(f"subset {list(subset)} has size {len(subset)}, expected {self.d}")
            value = Fraction(value)
            if value:
                clean[subset] = clean.get(subset, Fraction(0)) + value
        object.__setattr__(self, "values", {k: v for k, v in sorted(clean.items()) if v})

    @classmethod
    def from_vector(cls, n: int, d: int, vector: Sequence[int | Fraction]) -> SetFunction:
        """Coordinates in the lexicographic order of ``enumerate_subsets(n, d)``."""
        subsets = enumerate_subsets(n, d)
        if len(vector) != len(subsets):
            raise ValueError(f"expected {len(subsets)} coordinates, got {len(vector)}")
        return cls(n, d, {z: Fraction(v) for z, v in zip(subsets, vector) if v})

    def __call__(self, subset: Iterable[int]) -> Fraction:
        return self.values.get(tuple(sorted(subset)), Fraction(0))

    def to_vector(self) -> list[Fraction]:
        return [self(z) for z in enumerate_subsets(self.n, self.d)]

    def is_zero(self) -> bool:
        return not self.values

    def scaled_integers(self) -> tuple[dict[KSubset, int], int]:
        """Integer values and the common denominator D with f = values / D."""
        denominator = lcm(*(v.denominator for v in self.values.values())) if self.values else 1
        return {z: int(v * denominator) for z, v in self.values.items()}, denominator

    def require_ground_size(self, n: int) -> None:
        if self.n != n:
            raise GroundSizeMismatchError(n, self.n)


@dataclass(frozen=True)
class HarmonicFunction(SetFunction):
    """A set function in Harm_d = ker(gamma); validated at construction."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.d == 0:
            return
        violations = gamma(self).values
        if violations:
            row, value = next(iter(violations.items()))
            raise NotHarmonicError(row, value)

    @classmethod
    def of(cls, f: SetFunction) -> HarmonicFunction:
        return cls(f.n, f.d, f.values)

    @property
    def underlying(self) -> SetFunction:
        return SetFunction(self.n, self.d, self.values)


def constant_function(n: int) -> HarmonicFunction:
    """The degree-0 function with value 1 on the empty set."""
    return HarmonicFunction(n, 0, {(): Fraction(1)})


def gamma(f: SetFunction) -> SetFunction:
    """(gamma f)(Y) = sum of f(Z) over d-subsets Z containing the (d-1)-subset Y."""
    if f.d == 0:
        raise SubsetError("gamma is not defined on degree 0")
    out: dict[KSubset, Fraction] = {}
    for z, value in f.values.items():
        for drop in range(len(z)):
            y = z[:drop] + z[drop + 1:]
            out[y] = out.get(y, Fraction(0)) + value
    return SetFunction(f.n, f.d - 1, out)


def gamma_matrix(n: int, d: int) -> RationalMatrix:
    """The C(n, d-1) x C(n, d) 0/1 inclusion matrix of gamma."""
    rows = enumerate_subsets(n, d - 1)
    cols = enumerate_subsets(n, d)
    index = {y: i for i, y in enumerate(rows)}
    data = [[0] * len(cols) for _ in rows]
    for j, z in enumerate(cols):
        for drop in range(d):
            data[index[z[:drop] + z[drop + 1:]]][j] = 1
    return RationalMatrix.from_rows(data, cols=len(cols))


@lru_cache(maxsize=None)
def harm_basis(n: int, d: int) -> tuple[HarmonicFunction, ...]:
    """Canonical basis of Harm_d on n points."""
    if n < 0 or not 0 <= d <= n:
        raise SubsetError(f"degree {d} outside 0..{n}")
    if d == 0:
        return (constant_function(n),)
    kernel = rational_kernel(gamma_matrix(n, d))
    logger.debug("Harm_%d on %d points has dimension %d", d, n, len(kernel))
    return tuple(HarmonicFunction.of(SetFunction.from_vector(n, d, vec)) for vec in kernel)


def harm_dimension(n: int, d: int) -> int:
    """C(n, d) - C(n, d-1), clipped at 0; the expected size of ``harm_basis``."""
    if d == 0:
        return 1
    return max(comb(n, d) - comb(n, d - 1), 0)


def tilde(f: SetFunction, subset: Iterable[int]) -> Fraction:
    """Sum of f over the d-subsets of X; 0 when |X| < d."""
    members = set(subset)
    if len(members) < f.d:
        return Fraction(0)
    return sum((v for z, v in f.values.items() if members.issuperset(z)), Fraction(0))


def f_slice(f: SetFunction, subset: Iterable[int], i: int) -> Fraction:
    """Sum of f(Z) over d-subsets Z meeting J in exactly i points."""
    if not 0 <= i <= f.d:
        raise SubsetError(f"slice index {i} outside 0..{f.d}")
    members = set(subset)
    return sum((v for z, v in f.values.items() if len(members.intersection(z)) == i), Fraction(0))


def superset_sums(f: SetFunction, i: int) -> dict[KSubset, Fraction]:
    """For every X in E_i, the sum of f(Z) over Z containing X."""
    out = {x: Fraction(0) for x in enumerate_subsets(f.n, i)}
    for z, value in f.values.items():
        members = set(z)
        for x in out:
            if members.issuperset(x):
                out[x] += value
    return out


class TildeTable:
    """
    The extension of f to every subset of E, indexed by bitmask.

    Values are stored as integers over a common denominator and filled by a
    subset-sum transform, so one table serves a whole 2^n enumeration.
    """

    def __init__(self, f: SetFunction):
        self.n = f.n
        self.d = f.d
        ints, self.denominator = f.scaled_integers()
        bound = sum(abs(v) for v in ints.values()) + 1
        self.dtype = exact_dtype(bound)
        table = np.zeros(1 << f.n, dtype=self.dtype)
        for z, v in ints.items():
            table[subset_to_mask(z)] = v
        for bit in range(f.n):
            view = table.reshape(-1, 2, 1 << bit)
            view[:, 1, :] += view[:, 0, :]
        table.setflags(write=False)
        self.numerators = table

    def __getitem__(self, mask: int) -> Fraction:
        return Fraction(int(self.numerators[mask]), self.denominator)

    @property
    def bound(self) -> int:
        """An upper bound on every |numerator| in the table."""
        if self.numerators.size == 0:
            return 0
        return int(np.abs(self.numerators).max())
