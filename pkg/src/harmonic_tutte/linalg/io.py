"""
Generator matrix files.

    # comment
    q n k
    k lines of n integers in [0, q)
"""
from __future__ import annotations

from pathlib import Path

from ..core.errors import MatrixFormatError
from .field_matrix import FieldMatrix


def parse_matrix(text: str) -> FieldMatrix:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    try:
        header = [int(tok) for tok in lines[0].split()]
    except ValueError as exc:
        raise MatrixFormatError(f"bad header {lines[0]!r}: {exc}") from exc
    if len(header) != 3:
        raise MatrixFormatError(f"header must be 'q n k', got {lines[0]!r}")
    q, n, k = header
    if n < 0 or k < 0:
        raise MatrixFormatError(f"negative dimensions in header {lines[0]!r}")
    body = lines[1:]
    if len(body) != k:
        raise MatrixFormatError(f"expected {k} rows, found {len(body)}")
    rows = []
    for number, line in enumerate(body, start=1):
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise MatrixFormatError(f"row {number}: {exc}") from exc
        if len(row) != n:
            raise MatrixFormatError(f"row {number}: expected {n} entries, found {len(row)}")
        if any(not 0 <= v < q for v in row):
            raise MatrixFormatError(f"row {number}: entries must lie in [0, {q})")
        rows.append(row)
    return FieldMatrix.from_rows(q, rows, cols=n)


def load_matrix(path: str | Path) -> FieldMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from exc
    return parse_matrix(text)


def format_matrix(m: FieldMatrix) -> str:
    lines = [f"{m.q} {m.cols} {m.rows}"]
    lines.extend(" ".join(str(v) for v in row) for row in m.to_rows())
    return "\n".join(lines) + "\n"
