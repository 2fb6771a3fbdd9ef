"""
Executable identities. Each verifier computes both sides independently and
returns a ``VerificationReport``.

Tables and scalars are compared as polynomials in x alone: the entry for
index t is the coefficient of x^t.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable

import numpy as np
import sympy

from ..codes import (
    LinearCode,
    b_from_a,
    b_table,
    dual_code,
    harmonic_distribution,
    harmonic_tutte_from_shortening,
    tilde_level_sums,
    weight_enumerator,
    zeta,
    zeta_from_b,
)
from ..enums.verify import Identity
from ..harmonic.functions import (
    HarmonicFunction,
    SetFunction,
    TildeTable,
    f_slice,
    gamma,
    harm_basis,
    harm_dimension,
    superset_sums,
    tilde,
)
from ..harmonic.subsets import as_subset, complement
from ..matroid import VectorMatroid, check_subset_cap, dual, harmonic_tutte, weighted_tutte_naive
from ..poly import BivariatePoly, expand_shifted_term
from ..utils.helpers import popcounts
from .report import Instance, VerificationReport, compare

_X, _Y = sympy.symbols("x y")


def verify_duality(m: VectorMatroid, f: HarmonicFunction, max_n: int | None = None) -> VerificationReport:
    """T(M-perp, f; x, y) = (-1)^d T(M, f; y, x)."""
    lhs = harmonic_tutte(dual(m), f, max_n=max_n)
    rhs = harmonic_tutte(m, f, max_n=max_n).swap_xy().scale((-1) ** f.d)
    return compare(Identity.DUALITY, Instance(m.representation, f), lhs, rhs)


def greene_rhs(code: LinearCode, f: HarmonicFunction, max_n: int | None = None) -> BivariatePoly:
    """
    (-1)^d (x-y)^(k-d) y^(n-k-d) T(M_C, f; (x+(q-1)y)/(x-y), x/y), as a polynomial.

    With X = (x+(q-1)y)/(x-y) and Y = x/y we have X - 1 = q y/(x-y) and
    Y - 1 = (x-y)/y, so the term of J is

        f~(J) (q y/(x-y))^(k-rho(J)) ((x-y)/y)^(|J|-rho(J))
          = f~(J) q^(k-rho(J)) (x-y)^(|J|-k) y^(k-|J|).

    Multiplying by (x-y)^(k-d) y^(n-k-d) leaves

        f~(J) q^(k-rho(J)) (x-y)^(|J|-d) y^(n-d-|J|),

    whose exponents are nonnegative on d <= |J| <= n-d, the only sizes where
    f~ can be nonzero. No rational function is ever formed.
    """
    f.require_ground_size(code.n)
    check_subset_cap(code.n, max_n)
    n, k, q, d = code.n, code.k, code.q, f.d
    if d > n - d:
        return BivariatePoly.zero()
    table = TildeTable(f)
    sizes = popcounts(n)
    powers = np.array([q**e for e in range(k + 1)], dtype=object)
    weights = table.numerators.astype(object) * powers[k - code.matroid.subset_ranks]
    by_size = np.zeros(n + 1, dtype=object)
    np.add.at(by_size, sizes, weights)
    sign = (-1) ** d
    total = BivariatePoly.zero()
    for t in range(d, n - d + 1):
        if by_size[t]:
            total = total + expand_shifted_term(Fraction(sign * int(by_size[t]), table.denominator), t - d, n - d - t)
    return total


def verify_greene(code: LinearCode, f: HarmonicFunction, max_n: int | None = None, max_words: int | None = None) -> VerificationReport:
    """Z_{C,f} = (-1)^d (x-y)^(k-d) y^(n-k-d) T(M_C, f; (x+(q-1)y)/(x-y), x/y)."""
    lhs = zeta(code, f, max_words=max_words)
    rhs = greene_rhs(code, f, max_n=max_n)
    return compare(Identity.GREENE, Instance(code.generator, f), lhs, rhs)


def _random_point(rng: np.random.Generator) -> tuple[Fraction, Fraction]:
    while True:
        x0 = Fraction(int(rng.integers(-30, 31)), int(rng.integers(1, 9)))
        y0 = Fraction(int(rng.integers(-30, 31)), int(rng.integers(1, 9)))
        if y0 != 0 and x0 != y0:
            return x0, y0


def verify_greene_pointwise(
    code: LinearCode,
    f: HarmonicFunction,
    points: int,
    rng: np.random.Generator,
    max_n: int | None = None,
) -> VerificationReport:
    """
    Evaluates the rational substitution into T(M_C, f) exactly at random points
    and compares with ``greene_rhs`` at the same points.
    """
    n, k, q, d = code.n, code.k, code.q, f.d
    tutte_poly = harmonic_tutte(code.matroid, f, max_n=max_n)
    expanded = greene_rhs(code, f, max_n=max_n)
    lhs_values, rhs_values = {}, {}
    for i in range(points):
        x0, y0 = _random_point(rng)
        at = tutte_poly.evaluate((x0 + (q - 1) * y0) / (x0 - y0), x0 / y0)
        lhs_values[i] = (-1) ** d * (x0 - y0) ** (k - d) * y0 ** (n - k - d) * at
        rhs_values[i] = expanded.evaluate(x0, y0)
    return compare(
        Identity.GREENE_POINTWISE,
        Instance(code.generator, f, extra={"points": points}),
        BivariatePoly.univariate(lhs_values),
        BivariatePoly.univariate(rhs_values),
    )


def macwilliams_rhs(code: LinearCode, f: HarmonicFunction, max_words: int | None = None) -> BivariatePoly:
    """(-1)^d (q^d / |C|) Z_{C,f}(x + (q-1)y, x - y)."""
    d, q = f.d, code.q
    return zeta(code, f, max_words=max_words).substitute_linear(1, q - 1, 1, -1, Fraction((-1) ** d * q**d, code.size))


def verify_macwilliams_harmonic(code: LinearCode, f: HarmonicFunction, max_words: int | None = None) -> VerificationReport:
    """
    Z_{C-perp,f}(x, y) = (-1)^d (q^d / |C|) Z_{C,f}(x + (q-1)y, x - y).

    For q = 2 this is the sqrt(2)-free form of
    (-1)^d (2^(n/2) / |C|) Z_{C,f}((x+y)/sqrt 2, (x-y)/sqrt 2): Z is homogeneous
    of degree n - 2d, so the substitution pulls out 2^(-(n-2d)/2) and
    2^(n/2) 2^(-(n-2d)/2) = 2^d.
    """
    lhs = zeta(dual_code(code), f, max_words=max_words)
    rhs = macwilliams_rhs(code, f, max_words=max_words)
    return compare(Identity.MACWILLIAMS, Instance(code.generator, f), lhs, rhs)


def verify_macwilliams_classical(code: LinearCode, max_words: int | None = None) -> VerificationReport:
    """W_{C-perp}(x, y) = (1/|C|) W_C(x + (q-1)y, x - y)."""
    q = code.q
    lhs = weight_enumerator(dual_code(code), max_words=max_words)
    rhs = weight_enumerator(code, max_words=max_words).substitute_linear(1, q - 1, 1, -1, Fraction(1, code.size))
    return compare(Identity.MACWILLIAMS_CLASSICAL, Instance(code.generator), lhs, rhs)


def _to_sympy(p: BivariatePoly) -> sympy.Expr:
    return sympy.Add(*(sympy.Rational(c.numerator, c.denominator) * _X**a * _Y**b for a, b, c in p))


def _from_sympy(expr: sympy.Expr) -> BivariatePoly | None:
    """The polynomial of a sympy expression, or None if a coefficient is irrational."""
    terms = {}
    for (a, b), c in sympy.Poly(sympy.expand(expr), _X, _Y).terms():
        if not c.is_Rational:
            return None
        terms[(a, b)] = Fraction(int(c.p), int(c.q))
    return BivariatePoly(terms)


def verify_sqrt2_reduction(code: LinearCode, f: HarmonicFunction, max_words: int | None = None) -> VerificationReport:
    """
    Binary codes only: evaluates (-1)^d (2^(n/2)/|C|) Z((x+y)/sqrt 2, (x-y)/sqrt 2)
    symbolically and compares it with the sqrt(2)-free right side used by
    ``verify_macwilliams_harmonic``.
    """
    if code.q != 2:
        raise ValueError("the sqrt(2) form applies to binary codes")
    root = sympy.sqrt(2)
    z = _to_sympy(zeta(code, f, max_words=max_words))
    substituted = z.subs({_X: (_X + _Y) / root, _Y: (_X - _Y) / root}, simultaneous=True)
    radical_form = (-1) ** f.d * root**code.n / sympy.Integer(code.size) * substituted
    lhs = _from_sympy(radical_form)
    rhs = macwilliams_rhs(code, f, max_words=max_words)
    return compare(
        Identity.SQRT2_REDUCTION,
        Instance(code.generator, f),
        lhs if lhs is not None else BivariatePoly.zero(),
        rhs,
        exact=lhs is not None,
    )


def verify_btf(code: LinearCode, f: HarmonicFunction, max_n: int | None = None, max_words: int | None = None) -> VerificationReport:
    """B_{t,f} from shortened subcodes against (-1)^d sum C(n-d-i, t-d) A_{i,f}."""
    lhs = BivariatePoly.univariate(b_table(code, f, max_n=max_n))
    rhs = BivariatePoly.univariate(b_from_a(harmonic_distribution(code, f, max_words), code.n, f.d))
    return compare(Identity.BTF, Instance(code.generator, f), lhs, rhs)


def verify_reinterpretation(code: LinearCode, f: HarmonicFunction, max_n: int | None = None, max_words: int | None = None) -> VerificationReport:
    """Z_{C,f} = (-1)^d sum_t B_{t,f} (x-y)^(t-d) y^(n-t-d)."""
    lhs = zeta_from_b(code, f, max_n=max_n)
    rhs = zeta(code, f, max_words=max_words)
    return compare(Identity.REINTERPRETATION, Instance(code.generator, f), lhs, rhs)


def verify_lemma_slices(f: SetFunction, subset: Iterable[int]) -> VerificationReport:
    """f^(i)(J) = (-1)^(d-i) C(d, i) f~(J) for 0 <= i <= d."""
    members = as_subset(subset, f.n)
    value = tilde(f, members)
    lhs = BivariatePoly.univariate({i: f_slice(f, members, i) for i in range(f.d + 1)})
    rhs = BivariatePoly.univariate({i: (-1) ** (f.d - i) * comb(f.d, i) * value for i in range(f.d + 1)})
    return compare(Identity.LEMMA_SLICES, Instance(function=f, subset=members), lhs, rhs)


def verify_tilde_sums(f: HarmonicFunction) -> VerificationReport:
    """
    Level sums sum_{X in E_t} f~(X) for t >= d (zero when d >= 1), plus the
    number of subsets J with f~(J) != (-1)^d f~(E \\ J) as the coefficient of y.
    """
    n, d = f.n, f.d
    levels = tilde_level_sums(f)
    table = TildeTable(f)
    full = (1 << n) - 1
    broken = sum(1 for mask in range(1 << n) if table[mask] != (-1) ** d * table[full ^ mask])
    lhs = BivariatePoly.univariate({t: levels[t] for t in range(d, n + 1)}) + BivariatePoly.monomial(broken, 0, 1)
    expected = {t: comb(n, t) for t in range(n + 1)} if d == 0 else {}
    return compare(Identity.TILDE_SUMS, Instance(function=f), lhs, BivariatePoly.univariate(expected))


def verify_complement_relation(f: HarmonicFunction, subset: Iterable[int]) -> VerificationReport:
    """f~(J) = (-1)^d f~(E \\ J) on a single subset."""
    members = as_subset(subset, f.n)
    lhs = BivariatePoly.constant(tilde(f, members))
    rhs = BivariatePoly.constant((-1) ** f.d * tilde(f, complement(members, f.n)))
    return compare(Identity.TILDE_SUMS, Instance(function=f, subset=members), lhs, rhs)


def verify_shortening_tutte(code: LinearCode, f: HarmonicFunction, max_n: int | None = None) -> VerificationReport:
    """T(M_C, f) from ranks against its form through l(J) = k - rho(J)."""
    lhs = harmonic_tutte(code.matroid, f, max_n=max_n)
    rhs = harmonic_tutte_from_shortening(code, f, max_n=max_n)
    return compare(Identity.SHORTENING_TUTTE, Instance(code.generator, f), lhs, rhs)


def verify_oracle_equivalence(m: VectorMatroid, f: HarmonicFunction, max_n: int | None = None) -> VerificationReport:
    """Prefix-cached harmonic Tutte polynomial against naive re-ranking."""
    lhs = harmonic_tutte(m, f, max_n=max_n)
    rhs = weighted_tutte_naive(m, f, max_n=max_n)
    return compare(Identity.ORACLE_EQUIVALENCE, Instance(m.representation, f), lhs, rhs)


def verify_harm_dimension(n: int, d: int) -> VerificationReport:
    """
    |harm_basis(n, d)| = C(n, d) - C(n, d-1) as the constant term; every basis
    element failing gamma f = 0 or a superset-sum condition adds to the y term.
    """
    basis = harm_basis(n, d)
    failures = 0
    for f in basis:
        if d == 0:
            continue
        if not gamma(f).is_zero() or any(v for i in range(d) for v in superset_sums(f, i).values()):
            failures += 1
    lhs = BivariatePoly.constant(len(basis)) + BivariatePoly.monomial(failures, 0, 1)
    rhs = BivariatePoly.constant(harm_dimension(n, d))
    return compare(Identity.HARM_DIMENSION, Instance(extra={"n": n, "d": d}), lhs, rhs)


