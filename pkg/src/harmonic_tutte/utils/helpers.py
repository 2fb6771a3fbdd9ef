from fractions import Fraction
from typing import Iterable

import numpy as np

# Largest magnitude accumulated in int64 arrays before switching to Python ints
INT64_SAFE = 2**62


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(text.strip())


def rational_to_str(value: Fraction | int) -> str:
    """Canonical rational string: ``"7"``, ``"-3/2"``."""
    return str(Fraction(value))


def subset_to_mask(subset: Iterable[int]) -> int:
    """Bitmask of a 1-based subset; element j sets bit j-1."""
    mask = 0
    for element in subset:
        mask |= 1 << (element - 1)
    return mask


def mask_to_subset(mask: int) -> tuple[int, ...]:
    return tuple(j + 1 for j in range(mask.bit_length()) if mask >> j & 1)


def popcounts(n: int) -> np.ndarray:
    """Sizes of all 2^n subsets, indexed by bitmask."""
    sizes = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        sizes[1 << i:1 << (i + 1)] = sizes[:1 << i] + 1
    return sizes


def exact_dtype(bound: int) -> type | np.dtype:
    """int64 when every partial sum stays below ``bound``, Python ints otherwise."""
    return np.dtype(np.int64) if bound < INT64_SAFE else object
