from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime

from ..core.errors import InvalidFieldError

# Residues are stored in int64 arrays
MAX_FIELD_SIZE = 2**63


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_q; elements are residues in [0, q)."""

    q: int

    def __post_init__(self) -> None:
        if not isinstance(self.q, int) or isinstance(self.q, bool) or not isprime(self.q):
            raise InvalidFieldError(f"field size must be a prime, got {self.q!r}")
        if self.q >= MAX_FIELD_SIZE:
            raise InvalidFieldError(f"field size must be below 2^63, got {self.q}")

    def inverse(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.q}")
        return pow(a, -1, self.q)

    def __str__(self) -> str:
        return f"F_{self.q}"


@lru_cache(maxsize=None)
def prime_field(q: int) -> PrimeField:
    return PrimeField(q)
