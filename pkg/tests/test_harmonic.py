from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harmonic_tutte.core.errors import NotHarmonicError, SubsetError
from harmonic_tutte.harmonic import (
    HarmonicFunction,
    SetFunction,
    TildeTable,
    as_subset,
    complement,
    constant_function,
    enumerate_subsets,
    f_slice,
    gamma,
    gamma_matrix,
    harm_basis,
    harm_dimension,
    superset_sums,
    tilde,
)
from harmonic_tutte.utils.helpers import mask_to_subset


@st.composite
def harmonic_combinations(draw):
    n = draw(st.integers(2, 7))
    d = draw(st.integers(1, n // 2))
    basis = harm_basis(n, d)
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(basis), max_size=len(basis)))
    values: dict = {}
    for c, f in zip(coeffs, basis):
        for z, v in f.values.items():
            values[z] = values.get(z, 0) + c * v
    return HarmonicFunction(n, d, values)


def test_enumerate_subsets_order():
    assert enumerate_subsets(3, 2) == [(1, 2), (1, 3), (2, 3)]
    assert enumerate_subsets(3, 0) == [()]
    with pytest.raises(SubsetError):
        enumerate_subsets(2, 3)


def test_as_subset_validation():
    assert as_subset([3, 1], 3) == (1, 3)
    assert as_subset(iter([2]), 2) == (2,)
    with pytest.raises(SubsetError):
        as_subset([0], 3)
    with pytest.raises(SubsetError):
        as_subset([1, 1], 3)
    assert complement((1, 3), 4) == (2, 4)


def test_f13_is_harmonic(f13):
    assert f13.values == {(1,): 1, (3,): -1}
    assert gamma(f13).is_zero()
    plain = f13.underlying
    assert type(plain) is SetFunction
    assert HarmonicFunction.of(plain) == f13


def test_non_harmonic_names_violated_row():
    with pytest.raises(NotHarmonicError, match=r"\(gamma f\)\(\{\}\) = 2, expected 0"):
        HarmonicFunction(3, 1, {(1,): 1, (3,): 1})
    with pytest.raises(NotHarmonicError) as info:
        HarmonicFunction(4, 2, {(1, 2): 1})
    assert info.value.row == (1,)


def test_set_function_rejects_wrong_sizes():
    with pytest.raises(SubsetError):
        SetFunction(3, 1, {(1, 2): 1})
    with pytest.raises(SubsetError):
        SetFunction(3, 4)


def test_gamma_matrix_shape():
    m = gamma_matrix(4, 2)
    assert (m.rows, m.cols) == (4, 6)
    assert all(sum(row) == 3 for row in m.entries)


def test_harm_basis_3_1():
    basis = harm_basis(3, 1)
    assert len(basis) == 2
    assert all(sum(f.to_vector()) == 0 for f in basis)
    assert basis[1].values == {(1,): 1, (3,): -1}


@pytest.mark.parametrize("n", range(1, 11))
def test_harm_dimension(n):
    for d in range(1, (n + 1) // 2 + 1):
        assert len(harm_basis(n, d)) == harm_dimension(n, d) == max(comb(n, d) - comb(n, d - 1), 0)


def test_harm_dimension_clips_at_zero():
    assert harm_dimension(3, 2) == 0
    assert harm_basis(3, 2) == ()
    assert harm_basis(4, 0) == (constant_function(4),)


def test_tilde_and_slices(f13):
    assert tilde(f13, ()) == 0
    assert tilde(f13, (1, 2)) == 1
    assert tilde(f13, (2, 3)) == -1
    assert tilde(f13, (1, 2, 3)) == 0
    assert f_slice(f13, (1, 2), 0) == -1
    assert f_slice(f13, (1, 2), 1) == 1
    with pytest.raises(SubsetError):
        f_slice(f13, (1,), 2)


def test_superset_sums_vanish_below_degree():
    for f in harm_basis(6, 3):
        for i in range(3):
            assert not any(superset_sums(f, i).values())


def test_constant_function_tilde():
    f = constant_function(4)
    assert all(tilde(f, mask_to_subset(mask)) == 1 for mask in range(16))


@settings(max_examples=30, deadline=None)
@given(harmonic_combinations())
def test_tilde_table_matches_direct_sum(f):
    table = TildeTable(f)
    for mask in range(1 << f.n):
        assert table[mask] == tilde(f, mask_to_subset(mask))


@settings(max_examples=30, deadline=None)
@given(harmonic_combinations())
def test_complement_relation(f):
    full = tuple(range(1, f.n + 1))
    for mask in range(1 << f.n):
        subset = mask_to_subset(mask)
        assert tilde(f, subset) == (-1) ** f.d * tilde(f, complement(subset, f.n))
    assert tilde(f, full) == 0


def test_tilde_table_with_fractions():
    f = HarmonicFunction(4, 1, {(1,): Fraction(1, 2), (2,): Fraction(-1, 3), (4,): Fraction(-1, 6)})
    table = TildeTable(f)
    assert table.denominator == 6
    assert table[0b0011] == Fraction(1, 6)
    assert table.bound == 3
