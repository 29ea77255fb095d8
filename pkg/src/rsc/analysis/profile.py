"""Error profile: samples, per-octave maxima and the mean-square curve."""

import logging
from typing import Iterable, Optional

from ..mainterm import MainTermPolynomial
from ..sieve import SummatoryTable
from .error_term import dyadic_max_delta, error_sample
from .mean_square import DEFAULT_ORDER, mean_square_curve
from .models import ErrorProfile

logger = logging.getLogger(__name__)


def dyadic_points(x_max: int, start: int = 1):
    """2^k for start <= 2^k <= x_max."""
    T = 1
    while T <= x_max:
        if T >= start:
            yield T
        T *= 2


def error_profile(
    table: SummatoryTable,
    poly: MainTermPolynomial,
    sample_points: Optional[Iterable[int]] = None,
    meansq_points: Optional[Iterable[int]] = None,
    order: int = DEFAULT_ORDER,
) -> ErrorProfile:
    """Samples default to the table checkpoints; octave maxima and M(T) need the full table."""
    if sample_points is None:
        sample_points = [cp.x for cp in table.checkpoints]
    profile = ErrorProfile(samples=[error_sample(x, table, poly) for x in sorted(set(sample_points))])
    if table.has_table:
        profile.dyadic_max = dyadic_max_delta(table, poly)
        if meansq_points is None:
            meansq_points = dyadic_points(table.x_max)
        profile.meansq = mean_square_curve(meansq_points, table, poly, order)
    else:
        logger.info("streaming table: octave maxima and mean square skipped")
    profile.check()
    return profile
