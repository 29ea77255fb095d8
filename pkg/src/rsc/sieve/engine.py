"""Block-segmented multiplicative sieve for f(k) and its summatory function."""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..arith import is_prime, primes_up_to
from ..counts import cyclic_degree_poly, evaluate_poly
from ..exceptions import CapacityError, DomainError, U63_MAX, WidthError, check_width
from .models import Checkpoint, GrowthReport, SieveBlock, SummatoryTable

logger = logging.getLogger(__name__)

SIEVE_CAPACITY = 10**8
DEFAULT_BLOCK_SIZE = 2**22
GROWTH_EXPONENT = 0.9


@lru_cache(maxsize=4096)
def f_prime_power(p: int, e: int) -> int:
    """f(p^e): the sum of c(p^a, p^b, p^c) over a + b + c = e."""
    if e < 0:
        raise DomainError(f"exponent must be nonnegative, got {e}", module="sieve")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime", module="sieve")
    return check_width(evaluate_poly(cyclic_degree_poly(e), p), f"f({p}^{e})", "sieve")


def _local_values(p: int, emax: int) -> np.ndarray:
    return np.array([f_prime_power(p, e) for e in range(emax + 1)], dtype=np.int64)


def _sieve_block(lo: int, hi: int, base_primes: np.ndarray) -> np.ndarray:
    """f(k) for lo <= k < hi using primes <= sqrt(hi - 1)."""
    size = hi - lo
    rem = np.arange(lo, hi, dtype=np.int64)
    f = np.ones(size, dtype=np.int64)
    for p in base_primes:
        p = int(p)
        if p * p > hi - 1:
            break
        start = -lo % p
        if start >= size:
            continue
        idx = np.arange(start, size, p)
        r = rem[idx]
        e = np.zeros(idx.size, dtype=np.int64)
        divisible = np.ones(idx.size, dtype=bool)
        while divisible.any():
            r[divisible] //= p
            e[divisible] += 1
            divisible = r % p == 0
        rem[idx] = r
        local = _local_values(p, int(e.max()))[e]
        current = f[idx]
        if int(current.max()) > U63_MAX // int(local.max()):
            raise WidthError(
                f"f overflows 63 bits while sieving [{lo}, {hi}) at p = {p}",
                module="sieve",
            )
        f[idx] = current * local
    # One prime factor above sqrt(k) remains; f(q) = 6 for every prime q.
    big = rem > 1
    if int(f[big].max(initial=0)) > U63_MAX // 6:
        raise WidthError(f"f overflows 63 bits while sieving [{lo}, {hi})", module="sieve")
    f[big] *= 6
    return f


def _block_task(args: Tuple[int, int, np.ndarray]) -> np.ndarray:
    lo, hi, base_primes = args
    return _sieve_block(lo, hi, base_primes)


def block_ranges(x_max: int, block_size: int) -> List[Tuple[int, int]]:
    """Half-open ranges [lo, hi) covering 1..x_max."""
    return [(lo, min(lo + block_size, x_max + 1)) for lo in range(1, x_max + 1, block_size)]


def _check_capacity(x_max: int) -> None:
    if not 1 <= x_max <= SIEVE_CAPACITY:
        raise CapacityError(
            f"x_max must lie in [1, {SIEVE_CAPACITY}], got {x_max}",
            extra={"capacity": SIEVE_CAPACITY},
            module="sieve",
        )


def iter_blocks(
    x_max: int, block_size: int = DEFAULT_BLOCK_SIZE, threads: int = 1
) -> Iterator[SieveBlock]:
    """Yield sieved blocks in increasing order of k.

    With threads > 1 blocks are computed in a process pool; map() keeps the
    output order, so the stream is identical for every thread count.
    """
    _check_capacity(x_max)
    base_primes = primes_up_to(math.isqrt(x_max))
    ranges = block_ranges(x_max, block_size)
    logger.info("sieving 1..%d in %d blocks on %d worker(s)", x_max, len(ranges), threads)

    if threads <= 1 or len(ranges) == 1:
        for lo, hi in ranges:
            yield SieveBlock(lo=lo, hi=hi, f=_sieve_block(lo, hi, base_primes))
        return

    tasks = [(lo, hi, base_primes) for lo, hi in ranges]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for (lo, hi), f in zip(ranges, pool.map(_block_task, tasks)):
            logger.debug("block [%d, %d) done", lo, hi)
            yield SieveBlock(lo=lo, hi=hi, f=f)


def checkpoint_grid(x_max: int, samples: Iterable[int] = ()) -> List[int]:
    """Every 2^j and 10^j up to x_max, plus requested samples, sorted."""
    points = set()
    j = 1
    while j <= x_max:
        points.add(j)
        j *= 2
    j = 1
    while j <= x_max:
        points.add(j)
        j *= 10
    points.update(s for s in samples if 1 <= s <= x_max)
    return sorted(points)


def sieve_f(
    x_max: int,
    block_size: int = DEFAULT_BLOCK_SIZE,
    threads: int = 1,
    keep_table: bool = True,
    samples: Sequence[int] = (),
) -> SummatoryTable:
    """Sieve f(k) for all k <= x_max and accumulate D exactly."""
    _check_capacity(x_max)
    grid = checkpoint_grid(x_max, samples)
    checkpoints = []
    g = 0

    f_all = np.zeros(x_max + 1, dtype=np.int64) if keep_table else None
    D_all = np.zeros(x_max + 1, dtype=np.int64) if keep_table else None

    running = 0
    best_k, best_ratio = 1, 1.0
    for block in iter_blocks(x_max, block_size, threads):
        partial = np.cumsum(block.f, dtype=np.int64)
        block_total = int(partial[-1])
        if keep_table:
            check_width(running + block_total, f"D({block.hi - 1})", "sieve")
            f_all[block.lo : block.hi] = block.f
            D_all[block.lo : block.hi] = partial + running

        while g < len(grid) and grid[g] < block.hi:
            checkpoints.append(Checkpoint(x=grid[g], D=running + int(partial[grid[g] - block.lo])))
            g += 1

        ks = np.arange(block.lo, block.hi, dtype=np.float64)
        ratios = block.f / ks**GROWTH_EXPONENT
        i = int(np.argmax(ratios))
        if ratios[i] > best_ratio:
            best_k, best_ratio = block.lo + i, float(ratios[i])

        running += block_total

    table = SummatoryTable(
        x_max=x_max,
        f=f_all,
        D=D_all,
        checkpoints=tuple(checkpoints),
        total=running,
        growth=GrowthReport(k=best_k, ratio=best_ratio, exponent=GROWTH_EXPONENT),
    )
    logger.info(
        "D(%d) = %d; max f(k)/k^%.1f = %.3f at k = %d",
        x_max,
        running,
        GROWTH_EXPONENT,
        best_ratio,
        best_k,
    )
    return table


def growth_report(table: SummatoryTable, exponent: float = GROWTH_EXPONENT) -> GrowthReport:
    """Recompute max f(k) / k^exponent over a kept table."""
    if table.f is None:
        if table.growth is None:
            raise CapacityError("no growth data in a streaming table", module="sieve")
        return table.growth
    ks = np.arange(1, table.x_max + 1, dtype=np.float64)
    ratios = table.f[1:] / ks**exponent
    i = int(np.argmax(ratios))
    return GrowthReport(k=i + 1, ratio=float(ratios[i]), exponent=exponent)


def multiplicative_spot_check(
    table: SummatoryTable, pairs: Iterable[Tuple[int, int]]
) -> Optional[Tuple[int, int]]:
    """Return the first coprime (a, b) with f(ab) != f(a) f(b), else None."""
    for a, b in pairs:
        if math.gcd(a, b) != 1 or a * b > table.x_max:
            continue
        if table.f_at(a * b) != table.f_at(a) * table.f_at(b):
            return a, b
    return None
