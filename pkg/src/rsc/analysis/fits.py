"""Log-log exponent fits."""

import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import InputError
from .models import FitResult, OctaveMax

MIN_MEAN_SQUARE_POINTS = 6
MIN_OCTAVES = 3


def _loglog_fit(xs: Sequence[float], ys: Sequence[float], min_points: int, what: str) -> FitResult:
    if len(xs) < min_points:
        raise InputError(f"{what} fit needs at least {min_points} points, got {len(xs)}", module="analysis")
    xs, ys = np.asarray(xs, dtype=np.float64), np.asarray(ys, dtype=np.float64)
    if np.any(xs <= 0) or np.any(ys <= 0):
        raise InputError(f"{what} fit needs positive data on both axes", module="analysis")
    lx, ly = np.log(xs), np.log(ys)
    alpha, intercept = np.polyfit(lx, ly, 1)
    residual = ly - (alpha * lx + intercept)
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0 else 1.0 - float(np.sum(residual**2)) / ss_tot
    return FitResult(alpha=float(alpha), intercept=float(intercept), r2=r2, points=len(xs))


def fit_exponent(points: Sequence[Tuple[int, float]]) -> FitResult:
    """Slope of log M(T) against log T."""
    return _loglog_fit([T for T, _ in points], [M for _, M in points], MIN_MEAN_SQUARE_POINTS, "mean-square")


def fit_delta_exponent(octaves: Sequence[OctaveMax]) -> FitResult:
    """Slope of log max|delta| against log 2^k; reported, never asserted."""
    return _loglog_fit(
        [2.0**o.k for o in octaves], [o.max_abs_delta for o in octaves], MIN_OCTAVES, "octave"
    )


def partial_exponents(points: Sequence[Tuple[int, float]]) -> List[Tuple[int, float, Optional[float]]]:
    """(T, M, local slope from the previous point) rows."""
    rows = []
    for i, (T, M) in enumerate(points):
        alpha = None
        if i > 0:
            T0, M0 = points[i - 1]
            if M0 > 0 and M > 0 and T != T0:
                alpha = math.log(M / M0) / math.log(T / T0)
        rows.append((T, M, alpha))
    return rows
