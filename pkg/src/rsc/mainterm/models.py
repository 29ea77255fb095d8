"""Data models for the main-term computation."""

from dataclasses import dataclass, field
from typing import Dict, Tuple

from mpmath import mp, mpf

from ..exceptions import ConsistencyError, PrecisionError

EULER_GAMMA_7 = mpf("0.5772157")


@dataclass(frozen=True)
class StieltjesTable:
    """gamma_0 ... gamma_K at a stated precision."""

    gammas: Tuple[mpf, ...]
    precision_digits: int
    toy: bool = False

    @property
    def K(self) -> int:
        return len(self.gammas) - 1

    def __getitem__(self, k: int) -> mpf:
        if k > self.K:
            raise PrecisionError(f"gamma_{k} not in table (K = {self.K})", module="mainterm")
        return self.gammas[k]

    def check(self) -> None:
        """gamma_0 must agree with Euler's constant to 7 digits."""
        if self.toy:
            return
        if abs(self.gammas[0] - EULER_GAMMA_7) > mpf("5e-8"):
            raise ConsistencyError(
                f"gamma_0 = {mp.nstr(self.gammas[0], 12)} is not Euler's constant",
                module="mainterm",
            )

    @classmethod
    def zeros(cls, K: int) -> "StieltjesTable":
        """All gamma_k = 0, for hand-checkable toy expansions."""
        return cls(gammas=tuple(mpf(0) for _ in range(K + 1)), precision_digits=0, toy=True)


@dataclass(frozen=True)
class MainTermPolynomial:
    """A_0 ... A_9 of the main term x * sum A_r (log x)^r."""

    A: Tuple[mpf, ...]
    precision_digits: int
    t_series: Tuple[mpf, ...] = field(default=(), repr=False)
    truncation: int = 9

    @property
    def degree(self) -> int:
        return len(self.A) - 1

    def check(self) -> None:
        """The leading coefficient T(1)/8709120 must be positive."""
        if not self.A[-1] > 0:
            raise ConsistencyError(
                f"leading coefficient A_{self.degree} = {mp.nstr(self.A[-1], 12)} is not positive",
                module="mainterm",
            )

    def as_strings(self, digits: int = None) -> Dict[str, str]:
        digits = digits or self.precision_digits
        return {f"A{r}": mp.nstr(a, digits) for r, a in enumerate(self.A)}
