"""Independent checks of the sieve: the literal triple sum and the Dirichlet identity."""

import logging
import math
from itertools import product
from typing import Iterator, Mapping, Optional, Tuple

import numpy as np

from ..arith import build_spf, factorize
from ..counts import c_rank3
from ..exceptions import CapacityError, InputError
from .engine import sieve_f
from .models import SummatoryTable

logger = logging.getLogger(__name__)

DIRECT_F_CAPACITY = 10**6


def _ordered_triples(k: int) -> Iterator[Tuple[int, int, int]]:
    """Every (l, m, n) with l m n = k, from the splits of each prime exponent."""
    f = factorize(k)
    per_prime = [
        [(p**a, p**b, p ** (e - a - b)) for a in range(e + 1) for b in range(e - a + 1)]
        for p, e in f
    ]
    for choice in product(*per_prime):
        l = m = n = 1
        for a, b, c in choice:
            l, m, n = l * a, m * b, n * c
        yield l, m, n


def direct_f(k: int) -> int:
    """f(k) as the literal sum of c(l, m, n) over ordered l m n = k."""
    if not 1 <= k <= DIRECT_F_CAPACITY:
        raise CapacityError(f"direct_f limited to 1 <= k <= {DIRECT_F_CAPACITY}, got {k}", module="sieve")
    return sum(c_rank3(l, m, n) for l, m, n in _ordered_triples(k))


def dirichlet_convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(a * b)(n) = sum over d | n of a(d) b(n/d), for 1 <= n < len(a)."""
    x = len(a) - 1
    c = np.zeros(x + 1, dtype=np.int64)
    for d in np.flatnonzero(a):
        d = int(d)
        top = x // d
        c[d : d * top + 1 : d] += a[d] * b[1 : top + 1]
    return c


def _power_indicator(x: int, power: int, weight_power: int) -> np.ndarray:
    """Coefficients of sum n^weight_power / n^(power s): value n^weight_power at n^power."""
    g = np.zeros(x + 1, dtype=np.int64)
    n = 1
    while n**power <= x:
        g[n**power] = n**weight_power
        n += 1
    return g


def _multiplicative_table(x: int, local) -> np.ndarray:
    spf = build_spf(max(x, 2))
    values = np.zeros(x + 1, dtype=np.int64)
    values[1] = 1
    for n in range(2, x + 1):
        value = 1
        for p, e in factorize(n, spf):
            value *= local(p, e)
        values[n] = value
    return values


def dirichlet_identity_check(
    x: int,
    t_coeffs: Mapping[int, int],
    table: Optional[SummatoryTable] = None,
) -> bool:
    """Check f = tau_6 * g2^3 * g3 * t coefficientwise up to x.

    g2 carries n at n^2 (the series zeta(2s - 1)), g3 carries n^2 at n^3
    (zeta(3s - 2)) and t is the multiplicative extension of ``t_coeffs``
    from prime powers.
    """
    if x < 1:
        raise InputError(f"x must be positive, got {x}", module="sieve")

    def t_local(p: int, e: int) -> int:
        try:
            return t_coeffs[p**e]
        except KeyError:
            raise InputError(f"no t coefficient for {p}^{e} = {p**e}", module="sieve")

    tau6 = _multiplicative_table(x, lambda p, e: math.comb(e + 5, 5))
    t = _multiplicative_table(x, t_local)
    g2 = _power_indicator(x, 2, 1)
    g3 = _power_indicator(x, 3, 2)

    series = tau6
    for factor in (g2, g2, g2, g3, t):
        series = dirichlet_convolve(series, factor)

    if table is None or not table.has_table or table.x_max < x:
        table = sieve_f(x)
    mismatch = np.flatnonzero(series[1:] != table.f[1 : x + 1])
    if mismatch.size:
        k = int(mismatch[0]) + 1
        logger.warning("Dirichlet identity fails at k = %d: %d != %d", k, series[k], table.f[k])
        return False
    return True
