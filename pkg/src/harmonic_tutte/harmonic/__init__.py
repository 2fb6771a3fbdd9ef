"""Discrete harmonic functions on the subsets of a finite set."""
from .functions import (
    HarmonicFunction,
    SetFunction,
    TildeTable,
    constant_function,
    f_slice,
    gamma,
    gamma_matrix,
    harm_basis,
    harm_dimension,
    superset_sums,
    tilde,
)
from .subsets import KSubset, as_subset, complement, enumerate_subsets

__all__ = [
    "HarmonicFunction",
    "KSubset",
    "SetFunction",
    "TildeTable",
    "as_subset",
    "complement",
    "constant_function",
    "enumerate_subsets",
    "f_slice",
    "gamma",
    "gamma_matrix",
    "harm_basis",
    "harm_dimension",
    "superset_sums",
    "tilde",
]
