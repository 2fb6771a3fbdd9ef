from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harmonic_tutte.core.errors import NotDivisibleError
from harmonic_tutte.poly import (
    BivariatePoly,
    binomial_shift_matrix,
    expand_shifted_term,
    from_records,
    from_shifted_counts,
)

x = BivariatePoly.x()
y = BivariatePoly.y()

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)),
    rationals,
    max_size=6,
).map(BivariatePoly)


def test_canonical_text():
    w = x**7 + 7 * x**4 * y**3 + 7 * x**3 * y**4 + y**7
    assert str(w) == "x^7 + 7x^4y^3 + 7x^3y^4 + y^7"
    assert str(x + y - x * y) == "x - xy + y"
    assert str(BivariatePoly.monomial(Fraction(-3, 2), 1, 1)) == "-(3/2)xy"
    assert str(BivariatePoly.constant(Fraction(-1, 2))) == "-1/2"
    assert str(BivariatePoly.zero()) == "0"


def test_zero_coefficients_are_dropped():
    p = BivariatePoly({(1, 0): 1, (0, 1): 0})
    assert len(p) == 1
    assert (x - x).is_zero()


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        BivariatePoly({(-1, 0): 1})


def test_swap_and_evaluate():
    p = 2 * x**2 * y + 3
    assert p.swap_xy() == 2 * x * y**2 + 3
    assert p.evaluate(Fraction(1, 2), 4) == Fraction(5)


def test_substitute_linear():
    assert x.substitute_linear(1, 1, 1, -1) == x + y
    assert (x * y).substitute_linear(1, 1, 1, -1, scale=Fraction(1, 2)) == (x**2 - y**2).scale(Fraction(1, 2))


def test_divide_by_xy_power():
    assert (x**2 * y**3 - x * y).divide_by_xy_power(1) == x * y**2 - 1
    with pytest.raises(NotDivisibleError):
        (x**2 + x * y).divide_by_xy_power(1)


def test_homogeneity():
    assert (x**3 + x * y**2).homogeneous_degree() == 3
    assert not (x + 1).is_homogeneous()
    assert BivariatePoly.zero().homogeneous_degree() is None


def test_expand_shifted_term():
    assert expand_shifted_term(1, 2, 0) == x**2 - 2 * x * y + y**2
    assert expand_shifted_term(Fraction(3), 0, 2) == 3 * y**2
    with pytest.raises(ValueError):
        expand_shifted_term(1, -1, 0)


def test_binomial_shift_matrix():
    s = binomial_shift_matrix(2, -1)
    assert [list(row) for row in s] == [[1, 0, 0], [-1, 1, 0], [1, -2, 1]]


def test_from_shifted_counts():
    counts = np.array([[0, 1], [1, 0]], dtype=np.int64)
    assert from_shifted_counts(counts, -1, -1) == x + y - 2
    assert from_shifted_counts(counts, -1, -1, denominator=2) == (x + y - 2).scale(Fraction(1, 2))


def test_records_round_trip():
    p = x**3 - Fraction(2, 3) * y + 5
    assert from_records(p.to_records()) == p
    assert p.to_records()[0] == {"x": 3, "y": 0, "coeff": "1"}


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60, deadline=None)
@given(polys, polys, rationals, rationals)
def test_evaluation_is_a_homomorphism(p, q, a, b):
    assert (p * q).evaluate(a, b) == p.evaluate(a, b) * q.evaluate(a, b)
    assert (p + q).evaluate(a, b) == p.evaluate(a, b) + q.evaluate(a, b)


@settings(max_examples=40, deadline=None)
@given(polys, rationals, rationals)
def test_substitution_agrees_with_evaluation(p, a, b):
    image = p.substitute_linear(1, 1, 1, -1, scale=3)
    assert image.evaluate(a, b) == 3 * p.evaluate(a + b, a - b)


@settings(max_examples=60, deadline=None)
@given(rationals, st.integers(0, 6), st.integers(0, 6), rationals, rationals)
def test_expand_shifted_term_evaluates_pointwise(c, a, b, x0, y0):
    assert expand_shifted_term(c, a, b).evaluate(x0, y0) == c * (x0 - y0) ** a * y0**b
