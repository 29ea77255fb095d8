"""Data models for error-term diagnostics."""

from dataclasses import dataclass, field
from typing import List, Tuple

from mpmath import mpf

from ..exceptions import ConsistencyError


@dataclass(frozen=True)
class ErrorSample:
    """One row of x, D(x), main(x), delta(x)."""

    x: int
    D: int
    main: mpf
    delta: mpf
    precision_digits: int = 15

    @property
    def relative_error(self) -> float:
        return float(abs(self.delta) / self.D)


@dataclass(frozen=True)
class OctaveMax:
    """max |delta| over the octave [2^k, 2^(k+1))."""

    k: int
    x: int
    max_abs_delta: float

    @property
    def scaled(self) -> float:
        """max |delta| / 2^k."""
        return self.max_abs_delta / 2.0**self.k


@dataclass(frozen=True)
class FitResult:
    """Least-squares line log y = alpha log x + intercept."""

    alpha: float
    intercept: float
    r2: float
    points: int


@dataclass
class ErrorProfile:
    samples: List[ErrorSample] = field(default_factory=list)
    dyadic_max: List[OctaveMax] = field(default_factory=list)
    meansq: List[Tuple[int, float]] = field(default_factory=list)

    def check(self) -> None:
        """M(1) = 0 and M(T) nondecreasing."""
        for T, M in self.meansq:
            if T == 1 and M != 0:
                raise ConsistencyError(f"M(1) = {M}, expected 0", module="analysis")
        values = [M for _, M in self.meansq]
        if any(b < a for a, b in zip(values, values[1:])):
            raise ConsistencyError("mean square is not monotone in T", module="analysis")

    def max_relative_error(self) -> float:
        return max((s.relative_error for s in self.samples), default=0.0)
