"""Truncated Laurent series in u = s - 1 with mpmath coefficients."""

from typing import Iterable, List, Sequence, Union

from mpmath import mp, mpf

from ..exceptions import DomainError, PrecisionError

Number = Union[int, float, mpf]


class LaurentSeries:
    """sum c_k u^k for valuation <= k <= truncation, exact up to O(u^(truncation + 1)).

    Instances are immutable. Arithmetic tracks the truncation conservatively:
    a product of (v1, N1) and (v2, N2) is known up to min(N1 + v2, N2 + v1).
    """

    __slots__ = ("_valuation", "_coeffs")

    def __init__(self, valuation: int, coeffs: Iterable[Number]):
        coeffs = tuple(mpf(c) for c in coeffs)
        if not coeffs:
            raise DomainError("a Laurent series needs at least one coefficient", module="mainterm")
        self._valuation = int(valuation)
        self._coeffs = coeffs

    @classmethod
    def taylor(cls, coeffs: Sequence[Number]) -> "LaurentSeries":
        return cls(0, coeffs)

    @classmethod
    def monomial(cls, power: int, truncation: int, coeff: Number = 1) -> "LaurentSeries":
        """coeff * u^power known up to u^truncation."""
        if truncation < power:
            raise DomainError("truncation below the monomial degree", module="mainterm")
        return cls(power, [coeff] + [0] * (truncation - power))

    @classmethod
    def geometric(cls, ratio: Number, truncation: int) -> "LaurentSeries":
        """1 / (1 - ratio * u)."""
        r = mpf(ratio)
        return cls(0, [r**k for k in range(truncation + 1)])

    @property
    def valuation(self) -> int:
        return self._valuation

    @property
    def pole_order(self) -> int:
        return max(0, -self._valuation)

    @property
    def truncation(self) -> int:
        return self._valuation + len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coefficient(self, k: int) -> mpf:
        """Coefficient of u^k."""
        if k > self.truncation:
            raise PrecisionError(
                f"coefficient of u^{k} requested beyond truncation u^{self.truncation}",
                module="mainterm",
            )
        if k < self._valuation:
            return mpf(0)
        return self._coeffs[k - self._valuation]

    def truncate(self, truncation: int) -> "LaurentSeries":
        if truncation > self.truncation:
            raise PrecisionError("cannot extend a truncated series", module="mainterm")
        return LaurentSeries(self._valuation, self._coeffs[: truncation - self._valuation + 1])

    def _coerce(self, other) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return other
        return LaurentSeries.monomial(0, max(self.truncation, 0), other)

    def __add__(self, other) -> "LaurentSeries":
        other = self._coerce(other)
        lo = min(self.valuation, other.valuation)
        hi = min(self.truncation, other.truncation)
        return LaurentSeries(lo, [self.coefficient(k) + other.coefficient(k) for k in range(lo, hi + 1)])

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self._valuation, [-c for c in self._coeffs])

    def __sub__(self, other) -> "LaurentSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return LaurentSeries(self._valuation, [c * other for c in self._coeffs])
        v = self.valuation + other.valuation
        n = min(self.truncation + other.valuation, other.truncation + self.valuation)
        a, b = self._coeffs, other._coeffs
        out: List[mpf] = []
        for k in range(n - v + 1):
            lo, hi = max(0, k - len(b) + 1), min(k, len(a) - 1)
            out.append(mp.fsum(a[i] * b[k - i] for i in range(lo, hi + 1)))
        return LaurentSeries(v, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return self * (1 / mpf(other))
        return self * other.inverse()

    def __pow__(self, n: int) -> "LaurentSeries":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return LaurentSeries.monomial(0, max(self.truncation, 0))
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def inverse(self) -> "LaurentSeries":
        a = self._coeffs
        if a[0] == 0:
            raise DomainError("cannot invert a series with zero leading coefficient", module="mainterm")
        b = [1 / a[0]]
        for k in range(1, len(a)):
            b.append(-mp.fsum(a[i] * b[k - i] for i in range(1, k + 1)) / a[0])
        return LaurentSeries(-self._valuation, b)

    def _require_taylor(self, what: str) -> None:
        if self._valuation < 0 and any(c != 0 for c in self._coeffs[: -self._valuation]):
            raise DomainError(f"{what} needs a series without a pole", module="mainterm")

    def _taylor_coeffs(self) -> List[mpf]:
        return [self.coefficient(k) for k in range(0, self.truncation + 1)]

    def exp(self) -> "LaurentSeries":
        self._require_taylor("exp")
        a = self._taylor_coeffs()
        b = [mp.exp(a[0])]
        for n in range(1, len(a)):
            b.append(mp.fsum(k * a[k] * b[n - k] for k in range(1, n + 1)) / n)
        return LaurentSeries(0, b)

    def log(self) -> "LaurentSeries":
        self._require_taylor("log")
        a = self._taylor_coeffs()
        if a[0] <= 0:
            raise DomainError("log needs a positive constant term", module="mainterm")
        out = [mp.log(a[0])]
        for n in range(1, len(a)):
            s = mp.fsum(k * out[k] * a[n - k] for k in range(1, n))
            out.append((a[n] - s / n) / a[0])
        return LaurentSeries(0, out)

    def scale_variable(self, factor: Number) -> "LaurentSeries":
        """Substitute u -> factor * u."""
        f = mpf(factor)
        return LaurentSeries(
            self._valuation,
            [c * f ** (self._valuation + i) for i, c in enumerate(self._coeffs)],
        )

    def __call__(self, u: Number) -> mpf:
        u = mpf(u)
        return mp.fsum(c * u ** (self._valuation + i) for i, c in enumerate(self._coeffs))

    def __repr__(self) -> str:
        head = ", ".join(mp.nstr(c, 8) for c in self._coeffs[:4])
        return f"LaurentSeries(valuation={self._valuation}, truncation={self.truncation}, [{head}, ...])"
