from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import nextprime

from harmonic_tutte.core.errors import InvalidFieldError, MatrixFormatError, SubsetError
from harmonic_tutte.linalg import (
    FieldMatrix,
    RationalMatrix,
    column_rank,
    format_matrix,
    null_space,
    parse_matrix,
    prime_field,
    rational_kernel,
    row_basis,
    rref,
    subset_ranks,
)
from harmonic_tutte.utils.helpers import mask_to_subset

from conftest import HAMMING_74


@st.composite
def field_matrices(draw, max_rows=4, max_cols=7):
    q = draw(st.sampled_from([2, 3, 5]))
    rows = draw(st.integers(0, max_rows))
    cols = draw(st.integers(1, max_cols))
    entries = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return FieldMatrix.from_rows(q, entries, cols=cols)


def test_prime_field_rejects_composites():
    with pytest.raises(InvalidFieldError):
        prime_field(4)
    with pytest.raises(InvalidFieldError):
        FieldMatrix.from_rows(6, [[1, 0]])
    assert prime_field(5).inverse(2) == 3
    with pytest.raises(InvalidFieldError):
        prime_field(int(nextprime(2**63)))


def test_entries_must_be_residues():
    with pytest.raises(MatrixFormatError):
        FieldMatrix.from_rows(3, [[0, 3]])
    with pytest.raises(MatrixFormatError):
        FieldMatrix.from_rows(3, [[0, 1], [1]])


def test_rref_of_hamming_generator():
    result = rref(FieldMatrix.from_rows(2, HAMMING_74))
    assert result.rank == 4
    assert result.pivots == (1, 2, 3, 4)
    assert result.reduced.to_rows() == HAMMING_74


def test_rref_over_f3():
    result = rref(FieldMatrix.from_rows(3, [[2, 1, 0], [1, 2, 0]]))
    assert result.rank == 1
    assert result.reduced.to_rows()[0] == [1, 2, 0]


def test_null_space_of_hamming_is_simplex():
    m = FieldMatrix.from_rows(2, HAMMING_74)
    dual = null_space(m)
    assert dual.rows == 3
    assert not m.times_transpose(dual).any()
    assert rref(dual).rank == 3


def test_column_rank_and_bad_columns():
    m = FieldMatrix.from_rows(2, [[1, 1, 0]])
    assert column_rank(m, [1, 2]) == 1
    assert column_rank(m, [3]) == 0
    assert column_rank(m, []) == 0
    with pytest.raises(SubsetError):
        column_rank(m, [4])


def test_row_basis_drops_dependent_rows():
    m = FieldMatrix.from_rows(3, [[1, 2, 0], [2, 1, 0], [0, 0, 1]])
    assert row_basis(m).rows == 2


@settings(max_examples=40, deadline=None)
@given(field_matrices())
def test_subset_ranks_match_direct_ranking(m):
    ranks = subset_ranks(m)
    for mask in range(1 << m.cols):
        assert ranks[mask] == column_rank(m, mask_to_subset(mask))


@settings(max_examples=40, deadline=None)
@given(field_matrices())
def test_rank_nullity(m):
    dual = null_space(m)
    assert rref(m).rank + dual.rows == m.cols
    if m.rows and dual.rows:
        assert not m.times_transpose(dual).any()


def test_parse_matrix_round_trip():
    text = "# hamming\n2 7 4\n" + "\n".join(" ".join(map(str, row)) for row in HAMMING_74) + "\n"
    m = parse_matrix(text)
    assert m.to_rows() == HAMMING_74
    assert parse_matrix(format_matrix(m)) == m


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2 3\n1 1 0\n",
        "2 3 2\n1 1 0\n",
        "2 3 1\n1 1\n",
        "2 3 1\n1 2 0\n",
        "2 3 1\n1 a 0\n",
    ],
)
def test_parse_matrix_errors(text):
    with pytest.raises(MatrixFormatError):
        parse_matrix(text)


def test_parse_empty_code():
    m = parse_matrix("3 4 0\n")
    assert (m.rows, m.cols, m.q) == (0, 4, 3)


def test_rational_kernel_of_all_ones_row():
    kernel = rational_kernel(RationalMatrix.from_rows([[1, 1, 1]]))
    assert kernel == [(1, -1, 0), (1, 0, -1)]


def test_rational_kernel_is_canonical():
    m = RationalMatrix.from_rows([[Fraction(1, 2), 1, 0], [0, 0, 1]])
    (vec,) = rational_kernel(m)
    assert vec == (2, -1, 0)
    assert m.apply(vec) == [0, 0]


def test_rational_kernel_full_rank_is_empty():
    assert rational_kernel(RationalMatrix.from_rows([[1, 0], [0, 1], [1, 1]])) == []


def test_subset_ranks_of_zero_rows():
    ranks = subset_ranks(FieldMatrix.from_rows(2, [], cols=3))
    assert np.array_equal(ranks, np.zeros(8, dtype=np.int64))


def test_large_field_ranks_are_exact():
    q = int(nextprime(2**40))
    a = 2**39 + 12345
    m = FieldMatrix.from_rows(q, [[1, a], [a, a * a % q]])
    assert rref(m).rank == 1
    assert rref(m).reduced.to_rows() == [[1, a], [0, 0]]
    assert column_rank(m, [1, 2]) == 1
    assert subset_ranks(m)[0b11] == 1
    kernel = null_space(m)
    assert kernel.to_rows() == [[(-a) % q, 1]]
    assert not m.times_transpose(kernel).any()


@settings(max_examples=40, deadline=None)
@given(field_matrices(), st.data())
def test_column_rank_is_a_rank_function(m, data):
    columns = st.sets(st.integers(1, m.cols))
    a, b = data.draw(columns), data.draw(columns)
    rank_a, rank_b = column_rank(m, a), column_rank(m, b)
    assert 0 <= rank_a <= min(len(a), m.rows)
    assert column_rank(m, a | b) >= max(rank_a, rank_b)
    assert column_rank(m, a | b) + column_rank(m, a & b) <= rank_a + rank_b
