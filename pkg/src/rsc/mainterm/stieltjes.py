"""Stieltjes constants gamma_k and the defining-limit oracle."""

import logging
import math
from functools import lru_cache

import numpy as np
from mpmath import mp, mpf

from ..exceptions import DomainError, PrecisionError
from .models import StieltjesTable

logger = logging.getLogger(__name__)

MAX_STIELTJES_INDEX = 30
GUARD_DIGITS = 10
CHECK_DIGITS = 25


@lru_cache(maxsize=None)
def _stieltjes_at(k: int, dps: int) -> mpf:
    with mp.workdps(dps):
        return +mp.stieltjes(k)


def stieltjes(k: int, precision: int, certify: bool = True) -> mpf:
    """gamma_k to ``precision`` significant digits.

    With ``certify`` the value is also computed at a higher working precision;
    disagreement beyond the requested digits means the precision cannot be
    certified.
    """
    if not 0 <= k <= MAX_STIELTJES_INDEX:
        raise DomainError(
            f"Stieltjes index must lie in [0, {MAX_STIELTJES_INDEX}], got {k}",
            module="mainterm",
        )
    value = _stieltjes_at(k, precision + GUARD_DIGITS)
    if not certify:
        return value
    check = _stieltjes_at(k, precision + CHECK_DIGITS)
    with mp.workdps(precision + CHECK_DIGITS):
        scale = max(abs(check), mpf(10) ** (-precision))
        if abs(value - check) > scale * mpf(10) ** (-precision):
            raise PrecisionError(
                f"gamma_{k} not certified to {precision} digits",
                extra={"difference": mp.nstr(abs(value - check), 5)},
                module="mainterm",
            )
    return value


@lru_cache(maxsize=8)
def stieltjes_table(K: int, precision: int, certify: bool = False) -> StieltjesTable:
    """gamma_0 ... gamma_K, checked against Euler's constant. Cached per arguments."""
    logger.debug("computing Stieltjes constants up to gamma_%d at %d digits", K, precision)
    table = StieltjesTable(
        gammas=tuple(stieltjes(k, precision, certify) for k in range(K + 1)),
        precision_digits=precision,
    )
    table.check()
    return table


def stieltjes_limit(k: int, x: int, corrected: bool = True, chunk: int = 2**20) -> float:
    """sum_{n<=x} (log n)^k / n - (log x)^(k+1) / (k+1), in double precision.

    With ``corrected`` the trapezoid term (log x)^k / (2x) is also subtracted,
    which lowers the error from O(log^k x / x) to O(log^k x / x^2).
    """
    if k < 0 or x < 2:
        raise DomainError(f"limit formula needs k >= 0 and x >= 2, got ({k}, {x})", module="mainterm")
    partials = []
    for lo in range(1, x + 1, chunk):
        n = np.arange(lo, min(lo + chunk, x + 1), dtype=np.float64)
        partials.append(math.fsum(np.log(n) ** k / n))
    log_x = math.log(x)
    result = math.fsum(partials) - log_x ** (k + 1) / (k + 1)
    if corrected:
        result -= log_x**k / (2 * x)
    return result
