"""
Exact linear algebra over the rationals, on top of sympy's DomainMatrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


@dataclass(frozen=True)
class RationalMatrix:
    """A dense rows x cols matrix of Fractions (kept in lowest terms by Fraction)."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | Fraction]], cols: int | None = None) -> RationalMatrix:
        width = len(rows[0]) if rows else (cols or 0)
        data = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if any(len(row) != width for row in data):
            raise ValueError("ragged rational matrix")
        return cls(len(data), width, data)

    def apply(self, vector: Sequence[Fraction | int]) -> list[Fraction]:
        """self @ vector."""
        return [sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self.entries]

    def to_domain_matrix(self) -> DomainMatrix:
        data = [[QQ(v.numerator, v.denominator) for v in row] for row in self.entries]
        return DomainMatrix(data, (self.rows, self.cols), QQ)


def canonical_integer_vector(vector: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale to integers with gcd 1 and a positive first nonzero entry."""
    denominator = lcm(*(v.denominator for v in vector)) if vector else 1
    ints = [int(v * denominator) for v in vector]
    divisor = 0
    for v in ints:
        divisor = gcd(divisor, v)
    if divisor == 0:
        return tuple(ints)
    lead = next(v for v in ints if v)
    if lead < 0:
        divisor = -divisor
    return tuple(v // divisor for v in ints)


def rational_kernel(m: RationalMatrix) -> list[tuple[int, ...]]:
    """Canonicalized basis of {v : m v = 0}."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [tuple(int(i == j) for j in range(m.cols)) for i in range(m.cols)]
    kernel = m.to_domain_matrix().nullspace()
    vectors = []
    for row in kernel.to_list():
        vec = [Fraction(int(e.numerator), int(e.denominator)) for e in row]
        if any(vec):
            vectors.append(canonical_integer_vector(vec))
    return vectors
