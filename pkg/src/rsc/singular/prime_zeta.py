"""Prime zeta function P_Q(w) = sum_{p > Q} p^(-w) and its Taylor series in w."""

import logging
import math
from functools import lru_cache
from typing import List, Tuple

from mpmath import mp, mpf

from ..arith import factorize, mobius, next_prime, primes_up_to
from ..exceptions import DomainError
from ..mainterm import LaurentSeries

logger = logging.getLogger(__name__)

MIN_ARGUMENT = 1.05
GUARD_DIGITS = 10
MAX_MOBIUS_TERMS = 2000


def _mobius_terms(alpha: float, order: int, digits: int, q_next: int) -> Tuple[int, float]:
    """Number of Mobius terms K and the size of the first omitted one.

    The k-th term is bounded by 2 q^(-k alpha) max_r (k log q)^r / r!, q the first prime above the cutoff.
    """
    log_q = math.log(q_next)
    eps = 10.0 ** (-digits)

    def term_bound(k: int) -> float:
        grow = max((k * log_q) ** r / math.factorial(r) for r in range(order + 1))
        return 2.0 * math.exp(-k * alpha * log_q) * grow

    k = 1
    while term_bound(k + 1) >= eps:
        k += 1
        if k > MAX_MOBIUS_TERMS:
            raise DomainError(f"prime zeta at {alpha} needs more than {MAX_MOBIUS_TERMS} Mobius terms", module="singular")
    return k, 2.0 * term_bound(k + 1)


def _log_zeta_series(s: mpf, scale: int, order: int, small_primes: List[int]) -> LaurentSeries:
    """log zeta_Q(s + scale v) as a Taylor series in v, zeta_Q without its Euler factors at p <= Q."""
    zeta = LaurentSeries.taylor(
        [mp.zeta(s, 1, r) * mpf(scale) ** r / math.factorial(r) for r in range(order + 1)]
    )
    result = zeta.log()
    for p in small_primes:
        z = mpf(p) ** (-s)
        step = -scale * mp.log(p)
        removed = LaurentSeries.taylor(
            [1 - z] + [-z * step**r / math.factorial(r) for r in range(1, order + 1)]
        )
        result = result + removed.log()
    return result


@lru_cache(maxsize=None)
def prime_zeta_series(alpha, order: int, precision: int = 30, cutoff: int = 0) -> Tuple[LaurentSeries, float]:
    """Taylor coefficients in v of P_Q(alpha + v) up to v^order, with a truncation bound.

    P_Q(w) = sum_k mu(k)/k log zeta_Q(k w), where zeta_Q drops the Euler factors at p <= Q.
    """
    if alpha < MIN_ARGUMENT:
        raise DomainError(f"prime zeta needs w >= {MIN_ARGUMENT}, got {alpha}", module="singular")
    q_next = next_prime(cutoff)
    small_primes = primes_up_to(cutoff).tolist() if cutoff >= 2 else []
    K, bound = _mobius_terms(float(alpha), order, precision + 5, q_next)

    with mp.workdps(precision + GUARD_DIGITS):
        total = LaurentSeries.taylor([0] * (order + 1))
        for k in range(1, K + 1):
            mu = mobius(factorize(k))
            if mu == 0:
                continue
            term = _log_zeta_series(k * mpf(alpha), k, order, small_primes)
            total = total + term * (mpf(mu) / k)
        total = LaurentSeries.taylor([+c for c in total.coeffs])
    logger.debug("prime zeta series at %s (Q=%d): %d Mobius terms, bound %.2e", alpha, cutoff, K, bound)
    return total, bound


def prime_zeta(w, precision: int = 30, cutoff: int = 0) -> mpf:
    """sum_{p > cutoff} p^(-w) for real w >= 1.05."""
    series, _ = prime_zeta_series(mpf(w), 0, precision, cutoff)
    return series.coefficient(0)
