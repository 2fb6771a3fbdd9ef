"""Loading generator matrices, harmonic function files and subsets."""
from __future__ import annotations

from pathlib import Path
from typing import Optional

import orjson
from pydantic import ValidationError

from ..cli.dtos import HarmonicFunctionDTO
from ..codes import LinearCode
from ..core.errors import HarmonicFileError, SubsetError
from ..harmonic.functions import HarmonicFunction, constant_function
from ..harmonic.subsets import KSubset, as_subset
from ..linalg.io import load_matrix
from ..observability.logging import get_logger

logger = get_logger(__name__)


def load_code(path: str | Path) -> LinearCode:
    """The code spanned by the rows of a matrix file; dependent rows are dropped."""
    matrix = load_matrix(path)
    code = LinearCode.from_generator(matrix)
    if code.k < matrix.rows:
        logger.info("%s: %d of %d rows are independent", path, code.k, matrix.rows)
    return code


def parse_function(raw: bytes | str, source: str = "<input>") -> HarmonicFunction:
    try:
        payload = orjson.loads(raw)
    except orjson.JSONDecodeError as exc:
        raise HarmonicFileError(f"{source}: invalid JSON: {exc}") from exc
    try:
        dto = HarmonicFunctionDTO.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise HarmonicFileError(f"{source}: {where}: {first['msg']}") from exc
    return dto.to_function()


def load_function(path: str | Path) -> HarmonicFunction:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise HarmonicFileError(f"cannot read {path}: {exc}") from exc
    return parse_function(raw, str(path))


def function_or_constant(path: Optional[str | Path], n: int) -> HarmonicFunction:
    """The function in ``path``, or the constant degree-0 function on n points."""
    if path is None:
        return constant_function(n)
    f = load_function(path)
    f.require_ground_size(n)
    return f


def parse_subset(text: str, n: int) -> KSubset:
    """``"1,3,4"`` (or an empty string for the empty set) as a sorted subset of {1..n}."""
    tokens = [tok for tok in text.replace(" ", "").split(",") if tok]
    try:
        elements = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise SubsetError(f"bad subset {text!r}: {exc}") from exc
    return as_subset(elements, n)
