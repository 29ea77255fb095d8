"""Data models for integer factorization."""

from dataclasses import dataclass, field
from typing import Iterator, List, Tuple

import numpy as np


@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition of a positive integer."""

    value: int
    factors: Tuple[Tuple[int, int], ...] = ()

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    @property
    def exponents(self) -> List[int]:
        return [e for _, e in self.factors]

    def product(self) -> int:
        """Multiply the factors back together."""
        result = 1
        for p, e in self.factors:
            result *= p**e
        return result

    def exponent_of(self, p: int) -> int:
        """Return the exponent of ``p`` (the p-adic valuation of value)."""
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def is_canonical(self) -> bool:
        """Check ordering, exponents and the product invariant."""
        from .primes import is_prime

        previous = 1
        for p, e in self.factors:
            if p <= previous or e < 1 or not is_prime(p):
                return False
            previous = p
        return self.product() == self.value


@dataclass(frozen=True)
class SpfTable:
    """Smallest-prime-factor table for 2 <= k <= limit.

    Entries 0 and 1 are zero. The array is never written after construction.
    """

    limit: int
    spf: np.ndarray = field(repr=False)

    def __getitem__(self, k: int) -> int:
        return int(self.spf[k])

    def primes(self, upto: int = None) -> np.ndarray:
        """Return the primes <= upto (default: limit) as an int64 array."""
        upto = self.limit if upto is None else min(upto, self.limit)
        ks = np.arange(upto + 1, dtype=np.int64)
        head = self.spf[: upto + 1].astype(np.int64)
        return ks[(ks >= 2) & (head == ks)]
