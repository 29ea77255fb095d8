"""Main-term polynomial as the residue of zeta^6(s) zeta^3(2s-1) zeta(3s-2) T(s) x^s / s at s = 1."""

import logging
import math
from typing import Optional, Sequence

import numpy as np
from mpmath import mp, mpf

from ..exceptions import ConsistencyError, DomainError, PrecisionError
from .laurent import LaurentSeries
from .models import MainTermPolynomial, StieltjesTable
from .stieltjes import stieltjes_table

logger = logging.getLogger(__name__)

POLE_ORDER = 10
DEGREE = POLE_ORDER - 1
DEFAULT_TRUNCATION = DEGREE
WORKING_GUARD_DIGITS = 20


def zeta_laurent(scale: int, N: int, table: StieltjesTable) -> LaurentSeries:
    """zeta(1 + a u) = 1/(a u) + sum_{k<=N} (-1)^k gamma_k a^k u^k / k!."""
    if scale not in (1, 2, 3):
        raise DomainError(f"zeta scale must be 1, 2 or 3, got {scale}", module="mainterm")
    if N > table.K:
        raise PrecisionError(f"truncation {N} exceeds Stieltjes table K = {table.K}", module="mainterm")
    a = mpf(scale)
    coeffs = [1 / a] + [(-1) ** k * table[k] * a**k / math.factorial(k) for k in range(N + 1)]
    return LaurentSeries(-1, coeffs)


def zeta_product(N: int, table: StieltjesTable) -> LaurentSeries:
    """zeta(1+u)^6 zeta(1+2u)^3 zeta(1+3u): a pole of order exactly 10."""
    g = zeta_laurent(1, N, table) ** 6 * zeta_laurent(2, N, table) ** 3 * zeta_laurent(3, N, table)
    if g.valuation != -POLE_ORDER or g.coefficient(-POLE_ORDER) == 0:
        raise ConsistencyError(
            f"zeta product has pole order {g.pole_order}, expected {POLE_ORDER}",
            module="mainterm",
        )
    return g


def residue_main_term(
    t_series: Sequence,
    precision: int = 60,
    table: Optional[StieltjesTable] = None,
    N: int = DEFAULT_TRUNCATION,
) -> MainTermPolynomial:
    """A_0 ... A_9 from the Taylor coefficients c_k = T^(k)(1)/k! of T at s = 1.

    With G(u) the full integrand without x^s, A_j = [u^(-1-j)] G(u) / j!.
    """
    with mp.workdps(precision + WORKING_GUARD_DIGITS):
        if table is None:
            table = stieltjes_table(N, precision + WORKING_GUARD_DIGITS)
        t = LaurentSeries.taylor([mpf(c) for c in t_series])
        g = zeta_product(N, table) * t * LaurentSeries.geometric(-1, N)
        if g.truncation < -1:
            raise PrecisionError(
                f"G(u) known only up to u^{g.truncation}; need u^-1 "
                f"(raise the truncation or supply more T-series terms)",
                extra={"truncation": N, "t_terms": len(t_series)},
                module="mainterm",
            )
        A = tuple(g.coefficient(-1 - j) / math.factorial(j) for j in range(DEGREE + 1))
        logger.debug("A_9 = %s", mp.nstr(A[-1], 20))
        return MainTermPolynomial(
            A=A,
            precision_digits=precision,
            t_series=tuple(mpf(c) for c in t_series),
            truncation=N,
        )


def eval_main(poly: MainTermPolynomial, x) -> mpf:
    """x * P(log x) by Horner's rule at the current working precision."""
    x = mpf(x)
    if x < 1:
        raise DomainError(f"main term needs x >= 1, got {x}", module="mainterm")
    return x * mp.polyval(list(reversed(poly.A)), mp.log(x))


def longdouble_coefficients(poly: MainTermPolynomial) -> np.ndarray:
    """A_r rounded once to numpy longdouble."""
    return np.array([np.longdouble(mp.nstr(a, 30)) for a in poly.A], dtype=np.longdouble)


def main_term_values(poly: MainTermPolynomial, xs) -> np.ndarray:
    """Vectorised x * P(log x) in longdouble."""
    xs = np.asarray(xs, dtype=np.longdouble)
    if xs.size and xs.min() < 1:
        raise DomainError("main term needs x >= 1", module="mainterm")
    coeffs = longdouble_coefficients(poly)
    log_x = np.log(xs)
    acc = np.full_like(xs, coeffs[-1])
    for a in coeffs[-2::-1]:
        acc = acc * log_x + a
    return xs * acc
