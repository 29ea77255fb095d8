"""Primality, smallest-prime-factor sieve and factorization."""

import logging
import math
from functools import lru_cache
from typing import Optional

import numpy as np
from sympy import factorint

from ..exceptions import CapacityError, DomainError, InputError, U63_MAX
from .models import Factorization, SpfTable

logger = logging.getLogger(__name__)

SPF_MAX_LIMIT = 2**32

# Deterministic Miller-Rabin witnesses for every n < 2^64.
_U64_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_composite_witness(n: int, s: int, d: int, a: int) -> bool:
    """Return True if ``a`` proves n composite; n - 1 = d * 2^s with d odd."""
    a %= n
    if a == 0:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(1, s):
        x = x * x % n
        if x == n - 1:
            return False
        if x == 1:
            return True
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 2^64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n >= 2**64:
        raise DomainError(
            f"primality of {n} is outside the deterministic 64-bit range",
            module="arith",
        )
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return not any(_is_composite_witness(n, s, d, a) for a in _U64_WITNESSES)


def build_spf(limit: int) -> SpfTable:
    """Sieve the smallest prime factor of every k in [2, limit]."""
    if not 2 <= limit <= SPF_MAX_LIMIT:
        raise CapacityError(
            f"SPF table limit must lie in [2, 2^32], got {limit}",
            extra={"limit": limit},
            module="arith",
        )
    dtype = np.uint32 if limit < 2**32 else np.uint64
    spf = np.zeros(limit + 1, dtype=dtype)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            multiples = spf[p * p :: p]
            multiples[multiples == 0] = p
    ks = np.arange(limit + 1, dtype=dtype)
    unset = spf == 0
    spf[unset] = ks[unset]
    spf[:2] = 0
    logger.debug("built SPF table up to %d", limit)
    return SpfTable(limit=limit, spf=spf)


def factorize(n: int, table: Optional[SpfTable] = None) -> Factorization:
    """Canonical factorization of n; uses ``table`` when supplied."""
    if n < 1:
        raise DomainError(f"cannot factorize {n}", module="arith")
    if n > U63_MAX:
        raise CapacityError(f"{n} exceeds the 63-bit factorization range", module="arith")
    if n == 1:
        return Factorization(value=1, factors=())

    if table is not None:
        if n > table.limit:
            raise InputError(
                f"{n} is beyond the SPF table limit {table.limit}", module="arith"
            )
        factors = []
        rest = n
        while rest > 1:
            p = table[rest]
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
        return Factorization(value=n, factors=tuple(factors))

    return _factorize_untabled(n)


@lru_cache(maxsize=2**16)
def _factorize_untabled(n: int) -> Factorization:
    factors = tuple(sorted((int(p), int(e)) for p, e in factorint(n).items()))
    for p, _ in factors:
        if not is_prime(p):
            raise DomainError(f"factor {p} of {n} failed the primality check", module="arith")
    return Factorization(value=n, factors=factors)


def primes_up_to(limit: int) -> np.ndarray:
    """Primes <= limit as an int64 array (empty below 2)."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    return build_spf(limit).primes()


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    candidate = max(n + 1, 2)
    while not is_prime(candidate):
        candidate += 1
    return candidate
