"""
Exact bivariate polynomials in x, y with rational coefficients.

A polynomial is an immutable map (a, b) -> coefficient for the monomial
x^a y^b. Zero coefficients are never stored.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Union

import numpy as np

from .core.errors import NotDivisibleError
from .utils.helpers import rational_to_str

Scalar = Union[int, Fraction]
Exponents = tuple[int, int]


class BivariatePoly:
    """Element of Q[x, y]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, Scalar] | Iterable[tuple[Exponents, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, Fraction] = {}
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in x^{a} y^{b}")
            acc[(a, b)] = acc.get((a, b), Fraction(0)) + Fraction(c)
        self._terms = {key: c for key, c in acc.items() if c != 0}
        self._hash: int | None = None

    # constructors

    @classmethod
    def zero(cls) -> BivariatePoly:
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> BivariatePoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: Scalar, a: int, b: int) -> BivariatePoly:
        return cls({(a, b): c})

    @classmethod
    def x(cls) -> BivariatePoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BivariatePoly:
        return cls({(0, 1): 1})

    @classmethod
    def linear(cls, alpha: Scalar, beta: Scalar) -> BivariatePoly:
        """alpha*x + beta*y"""
        return cls({(1, 0): alpha, (0, 1): beta})

    @classmethod
    def univariate(cls, coefficients: Mapping[int, Scalar]) -> BivariatePoly:
        """Sum of c_t x^t; used to carry tables through polynomial comparisons."""
        return cls({(t, 0): c for t, c in coefficients.items()})

    # accessors

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def coefficient(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> list[tuple[int, int, Fraction]]:
        """Canonical order: x-exponent descending, then y-exponent ascending."""
        return [(a, b, self._terms[(a, b)]) for a, b in sorted(self._terms, key=lambda k: (-k[0], k[1]))]

    def __iter__(self) -> Iterator[tuple[int, int, Fraction]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def degree_bounds(self) -> Exponents:
        if not self._terms:
            return (0, 0)
        return max(a for a, _ in self._terms), max(b for _, b in self._terms)

    # ring operations

    def __add__(self, other: BivariatePoly | Scalar) -> BivariatePoly:
        other = _coerce(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BivariatePoly(out)

    __radd__ = __add__

    def __neg__(self) -> BivariatePoly:
        return BivariatePoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: BivariatePoly | Scalar) -> BivariatePoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> BivariatePoly:
        return _coerce(other) - self

    def __mul__(self, other: BivariatePoly | Scalar) -> BivariatePoly:
        if not isinstance(other, BivariatePoly):
            return self.scale(other)
        out: dict[Exponents, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> BivariatePoly:
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result, base = BivariatePoly.constant(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c: Scalar) -> BivariatePoly:
        c = Fraction(c)
        return BivariatePoly({key: v * c for key, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BivariatePoly.constant(other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation and substitution

    def evaluate(self, x0: Scalar, y0: Scalar) -> Fraction:
        x0, y0 = Fraction(x0), Fraction(y0)
        return sum((c * x0**a * y0**b for (a, b), c in self._terms.items()), Fraction(0))

    def swap_xy(self) -> BivariatePoly:
        return BivariatePoly({(b, a): c for (a, b), c in self._terms.items()})

    def substitute_linear(
        self,
        alpha: Scalar,
        beta: Scalar,
        gamma: Scalar,
        delta: Scalar,
        scale: Scalar = 1,
    ) -> BivariatePoly:
        """scale * p(alpha*x + beta*y, gamma*x + delta*y)"""
        max_a, max_b = self.degree_bounds()
        first = _powers(BivariatePoly.linear(alpha, beta), max_a)
        second = _powers(BivariatePoly.linear(gamma, delta), max_b)
        out = BivariatePoly.zero()
        for (a, b), c in self._terms.items():
            out = out + (first[a] * second[b]).scale(c)
        return out.scale(scale)

    # homogeneity

    def homogeneous_degree(self) -> int | None:
        """The common total degree of all terms, or None. The zero polynomial has none."""
        degrees = {a + b for a, b in self._terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree() is not None

    def divide_by_xy_power(self, d: int) -> BivariatePoly:
        """The exact quotient Z with self = (xy)^d Z."""
        offending = [(a, b) for a, b in self._terms if a < d or b < d]
        if offending:
            a, b = min(offending)
            raise NotDivisibleError(f"term x^{a} y^{b} is not divisible by (xy)^{d}")
        return BivariatePoly({(a - d, b - d): c for (a, b), c in self._terms.items()})

    # text

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for a, b, c in self.sorted_terms():
            monomial = _monomial_text(a, b)
            negative = c < 0
            magnitude = -c if negative else c
            if not monomial:
                body = rational_to_str(magnitude)
            elif magnitude == 1:
                body = monomial
            elif magnitude.denominator == 1:
                body = f"{magnitude}{monomial}"
            else:
                body = f"({magnitude}){monomial}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"BivariatePoly({self})"

    def to_records(self) -> list[dict[str, int | str]]:
        return [{"x": a, "y": b, "coeff": rational_to_str(c)} for a, b, c in self.sorted_terms()]


def _coerce(value: BivariatePoly | Scalar) -> BivariatePoly:
    return value if isinstance(value, BivariatePoly) else BivariatePoly.constant(value)


def _monomial_text(a: int, b: int) -> str:
    out = ""
    if a:
        out += "x" if a == 1 else f"x^{a}"
    if b:
        out += "y" if b == 1 else f"y^{b}"
    return out


def _powers(base: BivariatePoly, top: int) -> list[BivariatePoly]:
    powers = [BivariatePoly.constant(1)]
    for _ in range(top):
        powers.append(powers[-1] * base)
    return powers


def binomial_shift_matrix(top: int, shift: Scalar) -> np.ndarray:
    """S[a, i] = C(a, i) * shift^(a - i), the coefficients of (t + shift)^a."""
    shift = Fraction(shift)
    out = np.zeros((top + 1, top + 1), dtype=object)
    out[:] = Fraction(0)
    for a in range(top + 1):
        for i in range(a + 1):
            out[a, i] = comb(a, i) * shift ** (a - i)
    return out


def from_shifted_counts(
    counts: np.ndarray,
    shift_x: Scalar,
    shift_y: Scalar,
    denominator: int = 1,
) -> BivariatePoly:
    """Sum of counts[a, b] (x + shift_x)^a (y + shift_y)^b / denominator."""
    top_a, top_b = counts.shape[0] - 1, counts.shape[1] - 1
    coeffs = binomial_shift_matrix(top_a, shift_x).T @ counts.astype(object) @ binomial_shift_matrix(top_b, shift_y)
    scale = Fraction(1, denominator)
    return BivariatePoly(
        ((i, j), coeffs[i, j] * scale)
        for i in range(top_a + 1)
        for j in range(top_b + 1)
        if coeffs[i, j]
    )


def expand_shifted_term(c: Scalar, a: int, b: int) -> BivariatePoly:
    """c * (x - y)^a * y^b, expanded by the binomial theorem."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be nonnegative")
    c = Fraction(c)
    return BivariatePoly({(a - j, j + b): c * comb(a, j) * (-1) ** j for j in range(a + 1)})


def from_records(records: Iterable[Mapping[str, object]]) -> BivariatePoly:
    """Inverse of ``BivariatePoly.to_records``."""
    return BivariatePoly(((int(r["x"]), int(r["y"])), Fraction(str(r["coeff"]))) for r in records)
