"""M(T) = integral of delta(x)^2 over [1, T] by Gauss-Legendre cells."""

import logging
from typing import Iterable, List, Tuple

import numpy as np

from ..exceptions import DomainError, InputError
from ..mainterm import MainTermPolynomial, longdouble_coefficients
from ..sieve import SummatoryTable

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 8
CELL_CHUNK = 2**16


def _nodes(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes mapped to [0, 1] and their weights."""
    if order < 1:
        raise DomainError(f"quadrature order must be positive, got {order}", module="analysis")
    t, w = np.polynomial.legendre.leggauss(order)
    return (t.astype(np.longdouble) + 1) / 2, w.astype(np.longdouble) / 2


def _cell_integrals(lo: int, hi: int, D: np.ndarray, coeffs: np.ndarray, nodes, weights) -> np.ndarray:
    """integral over [n, n+1) of (D(n) - x P(log x))^2 for lo <= n < hi."""
    n = np.arange(lo, hi, dtype=np.int64)
    x = n.astype(np.longdouble)[:, None] + nodes[None, :]
    log_x = np.log(x)
    acc = np.full_like(x, coeffs[-1])
    for a in coeffs[-2::-1]:
        acc = acc * log_x + a
    diff = D[n].astype(np.longdouble)[:, None] - x * acc
    return (diff * diff * weights[None, :]).sum(axis=1)


def mean_square_curve(
    Ts: Iterable[int],
    table: SummatoryTable,
    poly: MainTermPolynomial,
    order: int = DEFAULT_ORDER,
) -> List[Tuple[int, float]]:
    """(T, M(T)) for every requested T, sorted, from one sequential pass over cells."""
    Ts = sorted(set(int(T) for T in Ts))
    if not Ts:
        return []
    if Ts[0] < 1:
        raise DomainError(f"mean square needs T >= 1, got {Ts[0]}", module="analysis")
    if table.D is None:
        raise InputError("mean square needs the full D table, not a streaming run", module="analysis")
    if Ts[-1] > table.x_max:
        raise InputError(f"T = {Ts[-1]} is beyond the table range {table.x_max}", module="analysis")

    nodes, weights = _nodes(order)
    coeffs = longdouble_coefficients(poly)
    results = []
    pending = iter(Ts)
    T = next(pending)
    while T == 1:
        results.append((1, 0.0))
        T = next(pending, None)
        if T is None:
            return results

    running = np.longdouble(0)
    last = Ts[-1]
    for lo in range(1, last, CELL_CHUNK):
        hi = min(lo + CELL_CHUNK, last)
        partial = running + np.cumsum(_cell_integrals(lo, hi, table.D, coeffs, nodes, weights))
        while T is not None and T - 1 < hi:
            results.append((T, float(partial[T - 1 - lo])))
            T = next(pending, None)
        running = partial[-1]
    logger.debug("mean square up to T = %d with order %d: %.6g", last, order, running)
    return results


def mean_square(T: int, table: SummatoryTable, poly: MainTermPolynomial, order: int = DEFAULT_ORDER) -> float:
    """integral_1^T delta(x)^2 dx with D constant on each [n, n+1)."""
    return mean_square_curve([T], table, poly, order)[0][1]
