"""Multiplicative functions evaluated on a Factorization."""

import math
from itertools import product
from typing import List, Tuple

from ..exceptions import DomainError, check_width
from .models import Factorization


def euler_phi(f: Factorization) -> int:
    """Euler's totient: product of p^(e-1) * (p - 1)."""
    result = 1
    for p, e in f:
        result *= p ** (e - 1) * (p - 1)
    return result


def tau_k(f: Factorization, k: int) -> int:
    """k-fold divisor function: product of C(e + k - 1, k - 1)."""
    if k < 1:
        raise DomainError(f"tau_k needs k >= 1, got {k}", module="arith")
    result = 1
    for _, e in f:
        result *= math.comb(e + k - 1, k - 1)
    return check_width(result, f"tau_{k}({f.value})", "arith")


def gcd_lcm(a: int, b: int) -> Tuple[int, int]:
    """Return (gcd(a, b), lcm(a, b)), the lcm checked against 63 bits."""
    if a < 1 or b < 1:
        raise DomainError(f"gcd_lcm needs positive arguments, got ({a}, {b})", module="arith")
    g = math.gcd(a, b)
    return g, check_width(a // g * b, f"lcm({a}, {b})", "arith")


def mobius(f: Factorization) -> int:
    """Moebius function: 0 unless squarefree, else (-1)^(number of primes)."""
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def mu_star_phi(f: Factorization) -> int:
    """Dirichlet convolution of Moebius and phi.

    Locally (mu*phi)(p) = p - 2 and (mu*phi)(p^e) = p^(e-2) (p - 1)^2 for e >= 2.
    """
    result = 1
    for p, e in f:
        if e == 1:
            result *= p - 2
        else:
            result *= p ** (e - 2) * (p - 1) ** 2
    return result


def divisors(f: Factorization) -> List[int]:
    """All positive divisors in increasing order."""
    ranges = [[p**i for i in range(e + 1)] for p, e in f]
    result = []
    for powers in product(*ranges):
        d = 1
        for q in powers:
            d *= q
        result.append(d)
    return sorted(result)
