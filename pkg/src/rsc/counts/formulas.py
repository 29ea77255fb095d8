"""Closed formulas for subgroup and cyclic-subgroup counts.

Rank-2 counts have three evaluation paths (divisor sum, Euler product over
prime-power counts, gcd double sum). Cyclic counts of any rank use the local
phi-quotient sum, which also has an exact polynomial-in-p form used by the
sieve and by the singular-series algebra.
"""

import logging
import math
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Sequence, Tuple

from sympy import ZZ
from sympy.polys.rings import PolyElement, ring

from ..arith import (
    divisors,
    euler_phi,
    factorize,
    is_prime,
    mu_star_phi,
    tau_k,
)
from ..exceptions import ConsistencyError, DomainError, check_width
from .models import EvaluationPath

logger = logging.getLogger(__name__)

PRING, P = ring("p", ZZ)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime", module="counts")


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise ConsistencyError(
            f"{what}: {numerator} is not divisible by {denominator}",
            extra={"remainder": r},
            module="counts",
        )
    return q


def c_pp(p: int, a: int, b: int) -> int:
    """Cyclic subgroups of Z_{p^a} x Z_{p^b}: 2(1 + p + ... + p^(a-1)) + (b-a+1) p^a."""
    _require_prime(p)
    if a > b:
        a, b = b, a
    return 2 * sum(p**i for i in range(a)) + (b - a + 1) * p**a


def s_pp(p: int, a: int, b: int) -> int:
    """All subgroups of Z_{p^a} x Z_{p^b}."""
    _require_prime(p)
    if a > b:
        a, b = b, a
    numerator = (
        (b - a + 1) * p ** (a + 2)
        - (b - a - 1) * p ** (a + 1)
        - (a + b + 3) * p
        + (a + b + 1)
    )
    return _exact_div(numerator, (p - 1) ** 2, f"s_pp({p}, {a}, {b})")


def _paired_exponents(m: int, n: int) -> Dict[int, Tuple[int, int]]:
    fm, fn = factorize(m), factorize(n)
    primes = sorted(set(fm.primes) | set(fn.primes))
    return {p: (fm.exponent_of(p), fn.exponent_of(p)) for p in primes}


def _rank2(m: int, n: int, path: EvaluationPath, cyclic: bool) -> int:
    if m < 1 or n < 1:
        raise DomainError(f"rank-2 counts need positive arguments, got ({m}, {n})", module="counts")
    name = "c" if cyclic else "s"

    if path is EvaluationPath.EULER_PRODUCT:
        local = c_pp if cyclic else s_pp
        total = 1
        for p, (a, b) in _paired_exponents(m, n).items():
            total *= local(p, a, b)
    elif path is EvaluationPath.DIVISOR_SUM:
        weight = mu_star_phi if cyclic else euler_phi
        total = 0
        for d in divisors(factorize(math.gcd(m, n))):
            total += (
                weight(factorize(d))
                * tau_k(factorize(m // d), 2)
                * tau_k(factorize(n // d), 2)
            )
    elif path is EvaluationPath.GCD_SUM:
        total = 0
        dn = divisors(factorize(n))
        for d in divisors(factorize(m)):
            for e in dn:
                g = math.gcd(d, e)
                total += euler_phi(factorize(g)) if cyclic else g
    else:
        raise DomainError(f"unknown evaluation path {path}", module="counts")

    return check_width(total, f"{name}({m}, {n})", "counts")


def c_rank2(m: int, n: int, path: EvaluationPath = EvaluationPath.EULER_PRODUCT) -> int:
    """Cyclic subgroups of Z_m x Z_n."""
    return _rank2(m, n, path, cyclic=True)


def s_rank2(m: int, n: int, path: EvaluationPath = EvaluationPath.EULER_PRODUCT) -> int:
    """All subgroups of Z_m x Z_n."""
    return _rank2(m, n, path, cyclic=False)


def _phi_pp(p: int, i: int) -> int:
    return 1 if i == 0 else p**i - p ** (i - 1)


def local_cyclic_count(p: int, exponents: Sequence[int]) -> int:
    """c(p^e1, ..., p^er) as the sum over i <= e of phi(p^i1)...phi(p^ir) / phi(p^max i)."""
    return _local_cyclic_count(p, tuple(exponents))


@lru_cache(maxsize=2**14)
def _local_cyclic_count(p: int, exponents: Tuple[int, ...]) -> int:
    total = 0
    for idx in product(*(range(e + 1) for e in exponents)):
        numerator = 1
        for i in idx:
            numerator *= _phi_pp(p, i)
        total += _exact_div(numerator, _phi_pp(p, max(idx, default=0)), "local phi quotient")
    return total


def c_rank_r(invariants: Iterable[int]) -> int:
    """Cyclic subgroups of Z_{n1} x ... x Z_{nr} for any rank r >= 1."""
    invariants = tuple(invariants)
    if not invariants or any(n < 1 for n in invariants):
        raise DomainError(f"invalid group invariants {invariants}", module="counts")
    factored = [factorize(n) for n in invariants]
    primes = sorted({p for f in factored for p in f.primes})
    total = 1
    for p in primes:
        total *= local_cyclic_count(p, [f.exponent_of(p) for f in factored])
    return check_width(total, f"c{invariants}", "counts")


def c_rank3(n1: int, n2: int, n3: int) -> int:
    """Cyclic subgroups of Z_{n1} x Z_{n2} x Z_{n3}."""
    return c_rank_r((n1, n2, n3))


# Exact polynomials in p.


def _phi_poly(i: int) -> PolyElement:
    return PRING.one if i == 0 else P**i - P ** (i - 1)


@lru_cache(maxsize=None)
def local_weight_poly(exponents: Tuple[int, ...]) -> PolyElement:
    """phi(p^i)phi(p^j)phi(p^k) / phi(p^max): the product with one maximal factor dropped."""
    rest = sorted(exponents)[:-1]
    result = PRING.one
    for i in rest:
        result *= _phi_poly(i)
    return result


def local_cyclic_poly(a: int, b: int, c: int) -> PolyElement:
    """c(p^a, p^b, p^c) as an integer polynomial in p."""
    if min(a, b, c) < 0:
        raise DomainError(f"exponents must be nonnegative, got ({a}, {b}, {c})", module="counts")
    total = PRING.zero
    for idx in product(range(a + 1), range(b + 1), range(c + 1)):
        total += local_weight_poly(idx)
    return total


@lru_cache(maxsize=None)
def weight_degree_poly(m: int) -> PolyElement:
    """Sum of the local weights over i + j + k = m."""
    total = PRING.zero
    for i in range(m + 1):
        for j in range(m - i + 1):
            total += local_weight_poly((i, j, m - i - j))
    return total


@lru_cache(maxsize=None)
def cyclic_degree_poly(e: int) -> PolyElement:
    """Sum of c(p^a, p^b, p^c) over a + b + c = e, as a polynomial in p.

    Summing the box sums over all (a, b, c) of total degree e counts each
    weight of degree m exactly C(e - m + 2, 2) times.
    """
    if e < 0:
        raise DomainError(f"degree must be nonnegative, got {e}", module="counts")
    total = PRING.zero
    for m in range(e + 1):
        total += math.comb(e - m + 2, 2) * weight_degree_poly(m)
    return total


def poly_coefficients(poly: PolyElement) -> Tuple[int, ...]:
    """Dense integer coefficients, lowest degree first; () for the zero polynomial."""
    if not poly:
        return ()
    dense = [0] * (poly.degree() + 1)
    for (k,), coeff in poly.terms():
        dense[k] = int(coeff)
    return tuple(dense)


def evaluate_poly(poly: PolyElement, p: int) -> int:
    """Exact integer value of a p-polynomial."""
    return sum(c * p**k for k, c in enumerate(poly_coefficients(poly)))
