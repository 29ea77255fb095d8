"""Exact generic local factor of T and its coefficients t(p^j)."""

import logging
from functools import lru_cache
from typing import Dict, Optional

from sympy import ZZ
from sympy.polys.ring_series import rs_mul
from sympy.polys.rings import ring

from ..arith import factorize, is_prime, primes_up_to
from ..counts import cyclic_degree_poly
from ..exceptions import DomainError
from .models import LocalFactorSeries

logger = logging.getLogger(__name__)

MIN_E, MAX_E = 4, 24

PX_RING, P, X = ring("p,X", ZZ)


def _lift(poly):
    """Move a polynomial in p into the (p, X) ring."""
    result = PX_RING.zero
    for (k,), c in poly.terms():
        result += int(c) * P**k
    return result


@lru_cache(maxsize=None)
def generic_local_factor(E: int = 16) -> LocalFactorSeries:
    """Local factor of T at a generic prime, truncated at X^E.

    T_p(X) = [sum c(p^a, p^b, p^c) X^(a+b+c)] (1 - X)^6 (1 - pX^2)^3 (1 - p^2 X^3).
    """
    if not MIN_E <= E <= MAX_E:
        raise DomainError(f"truncation E must lie in [{MIN_E}, {MAX_E}], got {E}", module="singular")
    counts = PX_RING.zero
    for m in range(E + 1):
        counts += _lift(cyclic_degree_poly(m)) * X**m
    removed = (1 - X) ** 6 * (1 - P * X**2) ** 3 * (1 - P**2 * X**3)
    factor = rs_mul(counts, removed, X, E + 1)

    by_degree = [{} for _ in range(E + 1)]
    for (j, m), c in factor.terms():
        by_degree[m][j] = int(c)
    coeffs = tuple(
        tuple(row.get(j, 0) for j in range(max(row) + 1)) if row else () for row in by_degree
    )

    lf = LocalFactorSeries(E=E, coeffs=coeffs)
    lf.check()
    logger.debug("local factor at E=%d has degree %d", E, lf.degree)
    return lf


def t_coefficient(p: int, j: int, lf: Optional[LocalFactorSeries] = None) -> int:
    """t(p^j): the X^j coefficient of the local factor evaluated at p."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime", module="singular")
    lf = lf or generic_local_factor()
    return lf.evaluate(j, p)


def t_multiplicative(n: int, lf: Optional[LocalFactorSeries] = None) -> int:
    """t(n) extended multiplicatively from prime powers."""
    lf = lf or generic_local_factor()
    value = 1
    for p, e in factorize(n):
        value *= lf.evaluate(e, p)
    return value


def t_coefficient_table(x: int, lf: Optional[LocalFactorSeries] = None) -> Dict[int, int]:
    """{p^j: t(p^j)} for every prime power 1 < p^j <= x."""
    lf = lf or generic_local_factor()
    table = {}
    for p in primes_up_to(x).tolist():
        q, j = p, 1
        while q <= x:
            table[q] = lf.evaluate(j, p)
            q *= p
            j += 1
    return table
