"""Data models for the summatory sieve."""

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from ..exceptions import ConsistencyError, InputError


@dataclass(frozen=True)
class Checkpoint:
    """Exact D(x) at a recorded point."""

    x: int
    D: int


@dataclass(frozen=True)
class SieveBlock:
    """f(k) for lo <= k < hi."""

    lo: int
    hi: int
    f: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return self.hi - self.lo


@dataclass(frozen=True)
class GrowthReport:
    """Largest f(k) / k^exponent seen while sieving."""

    k: int
    ratio: float
    exponent: float = 0.9


@dataclass
class SummatoryTable:
    """f(k) and D(k) = f(1) + ... + f(k) for k <= x_max.

    ``f`` and ``D`` are indexed by k with a zero at index 0. Streaming runs
    keep only ``checkpoints`` and leave both arrays as None.
    """

    x_max: int
    f: Optional[np.ndarray] = field(default=None, repr=False)
    D: Optional[np.ndarray] = field(default=None, repr=False)
    checkpoints: Tuple[Checkpoint, ...] = ()
    total: int = 0
    growth: Optional[GrowthReport] = None

    @property
    def has_table(self) -> bool:
        return self.f is not None and self.D is not None

    def f_at(self, k: int) -> int:
        self._require_table(k)
        return int(self.f[k])

    def D_at(self, x: int) -> int:
        """Exact D(x); falls back to checkpoints for streaming tables."""
        if not 1 <= x <= self.x_max:
            raise InputError(f"x = {x} is outside the table range [1, {self.x_max}]", module="sieve")
        if self.D is not None:
            return int(self.D[x])
        for cp in self.checkpoints:
            if cp.x == x:
                return cp.D
        raise InputError(f"D({x}) was not checkpointed in a streaming run", module="sieve")

    def validate(self) -> None:
        """Check prefix-sum consistency, positivity and the stored checkpoints."""
        if not self.has_table:
            return
        if self.f[1] != 1 or self.D[1] != 1:
            raise ConsistencyError("f(1) and D(1) must both equal 1", module="sieve")
        if np.any(self.f[1:] < 1):
            k = int(np.argmax(self.f[1:] < 1)) + 1
            raise ConsistencyError(f"f({k}) = {self.f[k]} is not positive", module="sieve")
        if np.any(np.diff(self.D) != self.f[1:]):
            raise ConsistencyError("D is not the prefix sum of f", module="sieve")
        for cp in self.checkpoints:
            if int(self.D[cp.x]) != cp.D:
                raise ConsistencyError(f"checkpoint at {cp.x} disagrees with the table", module="sieve")

    def _require_table(self, k: int) -> None:
        if self.f is None:
            raise InputError("f values were not kept in this streaming run", module="sieve")
        if not 1 <= k <= self.x_max:
            raise InputError(f"k = {k} is outside the table range [1, {self.x_max}]", module="sieve")
