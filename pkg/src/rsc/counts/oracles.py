"""Brute-force group-theoretic oracles for the closed formulas."""

import logging
import math
from typing import Set

import numpy as np

from ..arith import divisors, euler_phi, factorize, mobius
from ..exceptions import CapacityError, ConsistencyError
from .models import GroupSpec

logger = logging.getLogger(__name__)

CYCLIC_ORACLE_MAX_ORDER = 10**6
SUBGROUP_ORACLE_MAX_ORDER = 2000


def oracle_cyclic_count(group: GroupSpec) -> int:
    """Count cyclic subgroups from element orders.

    D_e = prod gcd(e, n_i) elements have order dividing e; Moebius inversion
    gives N_d elements of exact order d, and each cyclic subgroup of order d
    has phi(d) generators.
    """
    if group.order > CYCLIC_ORACLE_MAX_ORDER:
        raise CapacityError(
            f"cyclic oracle limited to order <= {CYCLIC_ORACLE_MAX_ORDER}, got {group.order}",
            module="counts",
        )
    exponent = math.lcm(*group.invariants)
    ds = divisors(factorize(exponent))
    dividing = {e: math.prod(math.gcd(e, n) for n in group.invariants) for e in ds}

    total = 0
    for d in ds:
        fd = factorize(d)
        exact = sum(mobius(factorize(d // e)) * dividing[e] for e in divisors(fd))
        q, r = divmod(exact, euler_phi(fd))
        if r:
            raise ConsistencyError(
                f"{exact} elements of order {d} do not split into cyclic subgroups",
                module="counts",
            )
        total += q
    return total


def _cyclic_subgroup(m: int, n: int, x: int, y: int) -> np.ndarray:
    order = math.lcm(m // math.gcd(x, m), n // math.gcd(y, n))
    ks = np.arange(order, dtype=np.int64)
    return ((ks * x) % m) * n + (ks * y) % n


def _join(m: int, n: int, mask: np.ndarray, members: np.ndarray, gx: int, gy: int) -> np.ndarray:
    """Boolean mask of <H, g> given the mask and member indices of H."""
    result = mask.copy()
    hx, hy = members // n, members % n
    sx, sy = gx % m, gy % n
    while not mask[sx * n + sy]:
        result[((hx + sx) % m) * n + (hy + sy) % n] = True
        sx, sy = (sx + gx) % m, (sy + gy) % n
    return result


def oracle_subgroup_count(m: int, n: int) -> int:
    """Enumerate every subgroup of Z_m x Z_n as <g, h> and deduplicate element sets."""
    GroupSpec((m, n))
    if m * n > SUBGROUP_ORACLE_MAX_ORDER:
        raise CapacityError(
            f"subgroup oracle limited to mn <= {SUBGROUP_ORACLE_MAX_ORDER}, got {m * n}",
            module="counts",
        )
    size = m * n

    cyclic = {}
    for x in range(m):
        for y in range(n):
            members = np.sort(_cyclic_subgroup(m, n, x, y))
            mask = np.zeros(size, dtype=bool)
            mask[members] = True
            key = np.packbits(mask).tobytes()
            cyclic.setdefault(key, (mask, members, x, y))

    generators = list(cyclic.values())
    seen: Set[bytes] = set(cyclic)
    for i, (mask, members, _, _) in enumerate(generators):
        for _, _, gx, gy in generators[i + 1 :]:
            joined = _join(m, n, mask, members, gx, gy)
            seen.add(np.packbits(joined).tobytes())
    logger.debug("Z_%d x Z_%d: %d cyclic, %d total subgroups", m, n, len(cyclic), len(seen))
    return len(seen)

