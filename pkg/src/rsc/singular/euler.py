"""Direct Euler product of T over primes p <= P, vectorised over primes."""

import logging
import math
from typing import List, Optional

import numpy as np
from mpmath import mp, mpf

from ..arith import primes_up_to
from ..exceptions import ConsistencyError, DomainError, PrecisionError
from ..mainterm import LaurentSeries
from .local_factor import generic_local_factor
from .models import TAYLOR_ORDER, LocalFactorSeries, TSeries, TSeriesMethod

logger = logging.getLogger(__name__)

MIN_PRIME_CUTOFF = 10**3
MIN_DIRECT_E = 10
PRIME_CHUNK = 2**16


def direct_tail_bound(P: int) -> float:
    """Bound on |log T - log prod_{p<=P} T_p| at s = 1.

    log T_p(1) = -14/p^2 + O(p^-3), so the tail is below 15 sum_{p>P} p^-2 <= 15/(P log P).
    """
    return 15.0 / (P * math.log(P))


def _local_taylor(primes: np.ndarray, lf: LocalFactorSeries, order: int) -> np.ndarray:
    """Taylor coefficients in u of T_p(1 + u), one row per prime."""
    p = primes.astype(np.float64)
    y = 1.0 / p
    log_p = np.log(p)
    weights = {}
    for m, j, c in lf.terms():
        weights[m] = weights.get(m, 0.0) + c * y ** (m - j)

    r = np.arange(order + 1)
    inv_fact = np.array([1.0 / math.factorial(k) for k in r])
    a = np.zeros((p.size, order + 1))
    for m, w in weights.items():
        if m == 0:
            a[:, 0] += w
            continue
        a += w[:, None] * (-m * log_p)[:, None] ** r * inv_fact
    return a


def _series_log(a: np.ndarray) -> np.ndarray:
    """Row-wise logarithm of Taylor series with positive constant terms."""
    out = np.empty_like(a)
    out[:, 0] = np.log(a[:, 0])
    for n in range(1, a.shape[1]):
        acc = np.zeros(a.shape[0])
        for k in range(1, n):
            acc += k * out[:, k] * a[:, n - k]
        out[:, n] = (a[:, n] - acc / n) / a[:, 0]
    return out


def _log_sums(primes: np.ndarray, lf: LocalFactorSeries, order: int) -> List[float]:
    """Column sums of log T_p(1 + u) over the given primes."""
    partials: List[List[float]] = [[] for _ in range(order + 1)]
    for start in range(0, primes.size, PRIME_CHUNK):
        chunk = primes[start : start + PRIME_CHUNK]
        a = _local_taylor(chunk, lf, order)
        bad = np.nonzero(a[:, 0] <= 0)[0]
        if bad.size:
            raise ConsistencyError(
                f"local factor at p = {int(chunk[bad[0]])} is not positive; raise the truncation E",
                module="singular",
            )
        logs = _series_log(a)
        for k in range(order + 1):
            partials[k].append(math.fsum(logs[:, k]))
    return [math.fsum(column) for column in partials]


def t_series_direct(
    P: int,
    E: int = 16,
    precision: int = 30,
    tolerance: Optional[float] = None,
    lf: Optional[LocalFactorSeries] = None,
) -> TSeries:
    """c_0 ... c_9 of prod_{p<=P} T_p(1 + u) with X^m -> p^(-m) exp(-m u log p)."""
    if P < MIN_PRIME_CUTOFF:
        raise DomainError(f"prime cutoff must be at least {MIN_PRIME_CUTOFF}, got {P}", module="singular")
    lf = lf or generic_local_factor(E)
    if lf.E < MIN_DIRECT_E:
        raise DomainError(f"direct product needs E >= {MIN_DIRECT_E}, got {lf.E}", module="singular")

    tail = direct_tail_bound(P)
    if tolerance is not None and tail > tolerance:
        raise PrecisionError(
            f"tail estimate {tail:.3e} at P = {P} exceeds tolerance {tolerance:.3e}",
            extra={"tail_bound": tail, "prime_cutoff": P},
            module="singular",
        )

    primes = primes_up_to(P)
    split = int(np.searchsorted(primes, P // 2, side="right"))
    lower = _log_sums(primes[:split], lf, TAYLOR_ORDER)
    upper = _log_sums(primes[split:], lf, TAYLOR_ORDER)
    total = [math.fsum(pair) for pair in zip(lower, upper)]

    with mp.workdps(precision):
        c = LaurentSeries.taylor([mpf(v) for v in total]).exp().coeffs
        increment = float(abs(c[0] - mp.exp(mpf(lower[0]))))
        series = TSeries(
            c=tuple(+v for v in c),
            method=TSeriesMethod.DIRECT,
            E=lf.E,
            prime_cutoff=P,
            tail_bound=tail,
            precision_digits=precision,
            increment=increment,
            extra={"primes": int(primes.size)},
        )
    series.check()
    logger.info("direct T-series: P=%d, %d primes, T(1)=%s, tail<=%.2e", P, primes.size, mp.nstr(series.T1, 15), tail)
    return series


def t_value_direct(s: float, P: int = 10**6, lf: Optional[LocalFactorSeries] = None) -> mpf:
    """prod_{p<=P} T_p(s) at a real point s."""
    lf = lf or generic_local_factor()
    exponents = [m * s - j for m, j, _ in lf.terms() if m > 0]
    if exponents and min(exponents) <= 1:
        raise DomainError(
            f"Euler product of T does not converge absolutely at s = {s}",
            extra={"min_exponent": min(exponents)},
            module="singular",
        )
    primes = primes_up_to(P)
    partials = []
    for start in range(0, primes.size, PRIME_CHUNK):
        p = primes[start : start + PRIME_CHUNK].astype(np.float64)
        value = np.zeros(p.size)
        for m, j, c in lf.terms():
            value += c * p ** (j - m * s)
        if np.any(value <= 0):
            raise ConsistencyError(f"local factor at s = {s} is not positive", module="singular")
        partials.append(math.fsum(np.log(value)))
    return mp.exp(mpf(math.fsum(partials)))
