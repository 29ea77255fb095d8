"""Data models for the singular factor T(s)."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterator, Optional, Tuple

from mpmath import mp, mpf

from ..exceptions import ConsistencyError, InputError

TAYLOR_ORDER = 9


class TSeriesMethod(str, Enum):
    DIRECT = "direct"
    ACCELERATED = "accelerated"


@dataclass(frozen=True)
class LocalFactorSeries:
    """Generic local factor of T at p: sum over m <= E of t_m(p) X^m.

    ``coeffs[m]`` holds the integer coefficients of t_m(p), lowest power of p
    first; the zero polynomial is the empty tuple.
    """

    E: int
    coeffs: Tuple[Tuple[int, ...], ...]

    def coefficient(self, m: int) -> Tuple[int, ...]:
        if not 0 <= m <= self.E:
            raise InputError(f"X-degree {m} is beyond the truncation E = {self.E}", module="singular")
        return self.coeffs[m]

    def evaluate(self, m: int, p: int) -> int:
        """t(p^m) for a concrete prime p."""
        return sum(c * p**j for j, c in enumerate(self.coefficient(m)))

    def terms(self) -> Iterator[Tuple[int, int, int]]:
        """Nonzero (m, j, coefficient of p^j X^m)."""
        for m, poly in enumerate(self.coeffs):
            for j, c in enumerate(poly):
                if c:
                    yield m, j, c

    @property
    def degree(self) -> int:
        """Largest X-degree with a nonzero coefficient."""
        return max((m for m, poly in enumerate(self.coeffs) if any(poly)), default=0)

    @property
    def terminates(self) -> bool:
        """True when every coefficient above ``degree`` vanishes inside the truncation."""
        return self.degree < self.E

    def min_weight(self) -> Optional[Tuple[int, int, int]]:
        """(m - j, m, j) minimising m - j over nonconstant terms.

        At s = 1 the term p^j X^m has size p^(j - m); m - j >= 2 everywhere is
        what makes the Euler product converge absolutely.
        """
        best = None
        for m, j, _ in self.terms():
            if m == 0:
                continue
            if best is None or m - j < best[0]:
                best = (m - j, m, j)
        return best

    def value_at_one(self, p: int) -> Fraction:
        """Exact T_p(1) = sum t_m(p) p^(-m) of the truncated factor."""
        return sum((Fraction(c * p**j, p**m) for m, j, c in self.terms()), Fraction(0))

    def check(self) -> None:
        if self.coeffs[0] != (1,):
            raise ConsistencyError(f"constant coefficient is {self.coeffs[0]}, expected (1,)", module="singular")
        if any(self.coeffs[1]):
            raise ConsistencyError(f"X coefficient is {self.coeffs[1]}, expected 0", module="singular")


@dataclass(frozen=True)
class TSeries:
    """Taylor coefficients c_k = T^(k)(1)/k! of the singular factor."""

    c: Tuple[mpf, ...]
    method: TSeriesMethod
    E: int
    prime_cutoff: int
    tail_bound: float
    precision_digits: int
    increment: Optional[float] = None
    extra: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def T1(self) -> mpf:
        return self.c[0]

    def check(self) -> None:
        """T(1) is a convergent product of positive local factors."""
        if not self.c[0] > 0:
            raise ConsistencyError(f"T(1) = {mp.nstr(self.c[0], 12)} is not positive", module="singular")

    def relative_difference(self, other: "TSeries", k: int) -> mpf:
        a, b = mpf(self.c[k]), mpf(other.c[k])
        return abs(a - b) / max(abs(a), abs(b))

    def to_dict(self) -> Dict[str, Any]:
        digits = max(self.precision_digits, 1)
        data = {f"c{k}": mp.nstr(v, digits) for k, v in enumerate(self.c)}
        data.update(
            {
                "method": self.method.value,
                "E": self.E,
                "prime_cutoff": self.prime_cutoff,
                "tail_bound": f"{self.tail_bound:.3e}",
            }
        )
        if self.increment is not None:
            data["increment"] = f"{self.increment:.3e}"
        return data
