"""Exact linear algebra over prime fields and the rationals."""
from .field_matrix import FieldMatrix, RowReduceResult, column_rank, null_space, row_basis, rref, subset_ranks
from .io import format_matrix, load_matrix, parse_matrix
from .prime_field import PrimeField, prime_field
from .rational import RationalMatrix, canonical_integer_vector, rational_kernel

__all__ = [
    "FieldMatrix",
    "PrimeField",
    "RationalMatrix",
    "RowReduceResult",
    "canonical_integer_vector",
    "column_rank",
    "format_matrix",
    "load_matrix",
    "null_space",
    "parse_matrix",
    "prime_field",
    "rational_kernel",
    "row_basis",
    "rref",
    "subset_ranks",
]
