"""T-series from exact small-prime factors and a prime-zeta tail.

For p > Q the logarithm of the local factor is expanded once, symbolically, in
Y = 1/p and W = X * p, so the term Y^d W^m stands for p^(-d) at weight m and
sums over primes to P_Q(d + m u). Primes p <= Q are multiplied in exactly.
"""

import logging
import math
from collections import defaultdict
from typing import Dict, List, Optional

from mpmath import mp, mpf
from sympy import QQ
from sympy.polys.ring_series import rs_log
from sympy.polys.rings import ring

from ..arith import next_prime, primes_up_to
from ..exceptions import PrecisionError
from ..mainterm import LaurentSeries
from .local_factor import generic_local_factor
from .models import TAYLOR_ORDER, LocalFactorSeries, TSeries, TSeriesMethod
from .prime_zeta import prime_zeta_series

logger = logging.getLogger(__name__)

YW_RING, Y, W = ring("Y,W", QQ)

GUARD_DIGITS = 10
EXTRA_DEGREES = 3


def graded_local_factor(lf: LocalFactorSeries):
    """The local factor with p^j X^m written as Y^(m-j) W^m."""
    poly = YW_RING.zero
    for m, j, c in lf.terms():
        if m - j < 0:
            raise PrecisionError(f"term p^{j} X^{m} grows with p", module="singular")
        poly += c * Y ** (m - j) * W**m
    return poly


def log_local_factor(lf: LocalFactorSeries, degree: int):
    """log T_p as a polynomial in Y and W, exact through Y^degree."""
    weight = lf.min_weight()
    if weight is not None and weight[0] < 2:
        d, m, j = weight
        raise PrecisionError(
            f"term p^{j} X^{m} has weight {d} < 2; the prime sum does not converge at s = 1",
            extra={"limiting_term": {"m": m, "j": j}},
            module="singular",
        )
    return rs_log(graded_local_factor(lf), Y, degree + 1)


def log_degree(precision: int, cutoff: int) -> int:
    """Y-degree needed so dropped terms stay below 10^(-precision)."""
    return math.ceil(precision / math.log10(next_prime(cutoff))) + EXTRA_DEGREES


def _weight_moments(log_poly, order: int) -> Dict[int, List[mpf]]:
    """For each weight d the moments sum_m a_(d,m) m^r, r <= order."""
    moments: Dict[int, List[mpf]] = defaultdict(lambda: [mpf(0)] * (order + 1))
    for (d, m), a in log_poly.terms():
        if d < 2:
            raise PrecisionError(
                f"log local factor has term Y^{d} W^{m}; the prime sum does not converge at s = 1",
                extra={"limiting_term": {"d": d, "m": m}},
                module="singular",
            )
        value = mpf(int(a.numerator)) / int(a.denominator)
        row = moments[d]
        for r in range(order + 1):
            row[r] += value * m**r
    return dict(moments)


def _small_prime_logs(lf: LocalFactorSeries, cutoff: int, order: int) -> LaurentSeries:
    """sum_{p<=Q} log T_p(1 + u), exact in the truncated local factor."""
    total = LaurentSeries.taylor([0] * (order + 1))
    if cutoff < 2:
        return total
    for p in primes_up_to(cutoff).tolist():
        log_p = mp.log(p)
        coeffs = [mpf(0)] * (order + 1)
        for m, j, c in lf.terms():
            weight = c * mpf(p) ** (j - m)
            for r in range(order + 1):
                coeffs[r] += weight * (-m * log_p) ** r / math.factorial(r)
        total = total + LaurentSeries.taylor(coeffs).log()
    return total


def t_series_accelerated(
    E: int = 16,
    precision: int = 30,
    cutoff: int = 1000,
    order: int = TAYLOR_ORDER,
    lf: Optional[LocalFactorSeries] = None,
) -> TSeries:
    """c_0 ... c_order of T(1 + u) with a prime-zeta tail beyond the cutoff."""
    lf = lf or generic_local_factor(E)
    degree = log_degree(precision, cutoff)
    log_poly = log_local_factor(lf, degree)

    with mp.workdps(precision + GUARD_DIGITS):
        moments = _weight_moments(log_poly, order)
        log_t = _small_prime_logs(lf, cutoff, order)
        tail_bound = 0.0
        for d in sorted(moments):
            pz, bound = prime_zeta_series(d, order, precision, cutoff)
            row = moments[d]
            log_t = log_t + LaurentSeries.taylor([pz.coefficient(r) * row[r] for r in range(order + 1)])
            tail_bound += bound * float(abs(row[0]))
        # the first dropped weight, with the coefficient growth of the log
        q_next = next_prime(cutoff)
        tail_bound += float(mpf(6) ** ((degree + 1) // 2) * mpf(q_next) ** (-(degree + 1)))
        c = log_t.exp().coeffs

    with mp.workdps(precision):
        series = TSeries(
            c=tuple(+v for v in c),
            method=TSeriesMethod.ACCELERATED,
            E=lf.E,
            prime_cutoff=cutoff,
            tail_bound=tail_bound,
            precision_digits=precision,
            extra={"log_degree": degree, "weights": len(moments)},
        )
    series.check()
    logger.info(
        "accelerated T-series: Q=%d, Y-degree %d, T(1)=%s, tail<=%.2e",
        cutoff,
        degree,
        mp.nstr(series.T1, 20),
        tail_bound,
    )
    return series
