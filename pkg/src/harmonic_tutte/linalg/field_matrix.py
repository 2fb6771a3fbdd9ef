"""
Dense matrices over prime fields.

Entries live in an int64 numpy array reduced mod q; products are formed in
Python ints once q^2 no longer fits. Column indices in the public API are
1-based, matching the ground set E = {1..n}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ..core.errors import MatrixFormatError, SubsetError
from ..observability.logging import get_logger
from ..utils.helpers import exact_dtype
from .prime_field import PrimeField, prime_field

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class FieldMatrix:
    """A k x n matrix over F_q. Immutable: the backing array is read-only."""

    field: PrimeField
    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.array(self.entries, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            raise MatrixFormatError(f"expected a 2-d array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.field.q):
            raise MatrixFormatError(f"entries must lie in [0, {self.field.q})")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def from_rows(cls, q: int, rows: Sequence[Sequence[int]], cols: int | None = None) -> FieldMatrix:
        """Build from nested lists; ``cols`` is required when there are no rows."""
        if not rows:
            if cols is None:
                raise MatrixFormatError("a matrix with no rows needs an explicit column count")
            return cls(prime_field(q), np.zeros((0, cols), dtype=np.int64))
        widths = {len(r) for r in rows}
        if len(widths) != 1 or (cols is not None and widths != {cols}):
            raise MatrixFormatError(f"ragged rows: widths {sorted(widths)}")
        return cls(prime_field(q), np.array(rows, dtype=np.int64).reshape(len(rows), widths.pop()))

    @classmethod
    def identity(cls, q: int, size: int) -> FieldMatrix:
        return cls(prime_field(q), np.eye(size, dtype=np.int64))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def to_rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]

    def column_vector(self, j: int) -> list[int]:
        """Column j (1-based) as a list of residues."""
        return [int(v) for v in self.entries[:, j - 1]]

    def select_columns(self, cols: Iterable[int]) -> FieldMatrix:
        idx = _column_indices(self, cols)
        return FieldMatrix(self.field, self.entries[:, idx])

    def times_transpose(self, other: FieldMatrix) -> np.ndarray:
        """self @ other^T over F_q."""
        dtype = exact_dtype(max(self.cols, 1) * self.q * self.q)
        product = self.entries.astype(dtype) @ other.entries.T.astype(dtype)
        return (product % self.q).astype(np.int64)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.q, self.entries.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"FieldMatrix(q={self.q}, rows={self.to_rows()!r}, cols={self.cols})"


@dataclass(frozen=True)
class RowReduceResult:
    reduced: FieldMatrix
    rank: int
    pivots: tuple[int, ...]  # 1-based, strictly increasing


def _column_indices(m: FieldMatrix, cols: Iterable[int]) -> list[int]:
    idx = sorted(set(cols))
    for j in idx:
        if not 1 <= j <= m.cols:
            raise SubsetError(f"column index {j} outside 1..{m.cols}")
    return [j - 1 for j in idx]


def _row_reduce(arr: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    mat = arr.astype(exact_dtype(q * q))
    n_rows, n_cols = mat.shape
    pivots: list[int] = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        nonzero = np.nonzero(mat[row:, col])[0]
        if nonzero.size == 0:
            continue
        pivot = row + int(nonzero[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        mat[row] = (mat[row] * pow(int(mat[row, col]), -1, q)) % q
        factors = mat[:, col].copy()
        factors[row] = 0
        mat = (mat - np.outer(factors, mat[row])) % q
        pivots.append(col)
        row += 1
    return mat.astype(np.int64), pivots


def rref(m: FieldMatrix) -> RowReduceResult:
    """Reduced row echelon form, rank and 1-based pivot columns."""
    reduced, pivots = _row_reduce(m.entries, m.q)
    return RowReduceResult(
        reduced=FieldMatrix(m.field, reduced),
        rank=len(pivots),
        pivots=tuple(p + 1 for p in pivots),
    )


def column_rank(m: FieldMatrix, cols: Iterable[int]) -> int:
    """Rank of the submatrix on the given 1-based columns; 0 for the empty set."""
    idx = _column_indices(m, cols)
    if not idx or m.rows == 0:
        return 0
    return len(_row_reduce(m.entries[:, idx], m.q)[1])


def null_space(m: FieldMatrix) -> FieldMatrix:
    """Rows spanning {v : m v^T = 0}; exactly n - rank(m) independent rows."""
    q, n = m.q, m.cols
    reduced, pivots = _row_reduce(m.entries, q)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = np.zeros(n, dtype=np.int64)
        vec[free] = 1
        for r, p in enumerate(pivots):
            vec[p] = (-reduced[r, free]) % q
        basis.append(vec)
    if not basis:
        return FieldMatrix(m.field, np.zeros((0, n), dtype=np.int64))
    return FieldMatrix(m.field, np.vstack(basis))


def row_basis(m: FieldMatrix) -> FieldMatrix:
    """The nonzero rows of the RREF: a full-row-rank matrix with the same row space."""
    reduced, pivots = _row_reduce(m.entries, m.q)
    return FieldMatrix(m.field, reduced[:len(pivots)])


def _reduce_against(vec: list[int], basis: list[tuple[int, list[int]]], q: int) -> tuple[int, list[int]] | None:
    for pivot, bvec in basis:
        c = vec[pivot]
        if c:
            vec = [(a - c * b) % q for a, b in zip(vec, bvec)]
    for p, v in enumerate(vec):
        if v:
            inv = pow(v, -1, q)
            return p, [(a * inv) % q for a in vec]
    return None


def subset_ranks(m: FieldMatrix) -> np.ndarray:
    """
    Column rank of every subset, indexed by bitmask (column j sets bit j-1).

    Subsets are visited depth-first by prefix; the echelon basis of the current
    prefix is kept on the stack, so each extension costs one reduction.
    """
    n, q = m.cols, m.q
    columns = [m.column_vector(j) for j in range(1, n + 1)]
    ranks = np.zeros(1 << n, dtype=np.int64)
    basis: list[tuple[int, list[int]]] = []

    def descend(j: int, mask: int) -> None:
        if j == n:
            ranks[mask] = len(basis)
            return
        descend(j + 1, mask)
        reduced = _reduce_against(columns[j], basis, q) if m.rows else None
        if reduced is None:
            descend(j + 1, mask | (1 << j))
        else:
            basis.append(reduced)
            descend(j + 1, mask | (1 << j))
            basis.pop()

    descend(0, 0)
    logger.debug("ranked %d column subsets of a %dx%d matrix over F_%d", 1 << n, m.rows, n, q)
    return ranks
