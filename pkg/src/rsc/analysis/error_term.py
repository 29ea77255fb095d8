"""The error term delta(x) = D(x) - x P(log x)."""

import logging
from typing import List, Optional, Sequence

import numpy as np
from mpmath import mp, mpf

from ..exceptions import InputError
from ..mainterm import MainTermPolynomial, eval_main, main_term_values
from ..sieve import SummatoryTable
from .models import ErrorSample, OctaveMax

logger = logging.getLogger(__name__)

OCTAVE_CHUNK = 2**20


def _require_table(table: SummatoryTable, upto: int) -> None:
    if table.D is None:
        raise InputError("this operation needs the full D table, not a streaming run", module="analysis")
    if upto > table.x_max:
        raise InputError(f"x = {upto} is beyond the table range {table.x_max}", module="analysis")


def delta(x: int, table: SummatoryTable, poly: MainTermPolynomial) -> mpf:
    """Exact D(x) minus the main term at the polynomial's working precision."""
    D = table.D_at(x)
    with mp.workdps(poly.precision_digits):
        return mpf(D) - eval_main(poly, x)


def error_sample(x: int, table: SummatoryTable, poly: MainTermPolynomial) -> ErrorSample:
    D = table.D_at(x)
    with mp.workdps(poly.precision_digits):
        main = eval_main(poly, x)
        return ErrorSample(x=x, D=D, main=main, delta=mpf(D) - main, precision_digits=poly.precision_digits)


def delta_values(xs: Sequence[int], table: SummatoryTable, poly: MainTermPolynomial) -> np.ndarray:
    """delta at many points, in longdouble."""
    xs = np.asarray(xs, dtype=np.int64)
    if xs.size == 0:
        return np.zeros(0, dtype=np.longdouble)
    if xs.min() < 1:
        raise InputError("delta needs x >= 1", module="analysis")
    _require_table(table, int(xs.max()))
    return table.D[xs].astype(np.longdouble) - main_term_values(poly, xs)


def dyadic_max_delta(
    table: SummatoryTable,
    poly: MainTermPolynomial,
    k_min: int = 0,
    k_max: Optional[int] = None,
) -> List[OctaveMax]:
    """max |delta| over each octave [2^k, 2^(k+1)) that meets [1, x_max].

    The last octave may be partial.
    """
    _require_table(table, 1)
    if k_max is None:
        k_max = table.x_max.bit_length() - 1
    octaves = []
    for k in range(k_min, k_max + 1):
        lo, hi = 2**k, min(2 ** (k + 1), table.x_max + 1)
        if lo > table.x_max:
            break
        best, best_x = np.longdouble(-1), lo
        for start in range(lo, hi, OCTAVE_CHUNK):
            xs = np.arange(start, min(start + OCTAVE_CHUNK, hi), dtype=np.int64)
            values = np.abs(delta_values(xs, table, poly))
            i = int(np.argmax(values))
            if values[i] > best:
                best, best_x = values[i], int(xs[i])
        octaves.append(OctaveMax(k=k, x=best_x, max_abs_delta=float(best)))
        logger.debug("octave 2^%d: max |delta| = %.6g at x = %d", k, best, best_x)
    return octaves


def relative_error(x: int, table: SummatoryTable, poly: MainTermPolynomial) -> float:
    """|delta(x)| / D(x)."""
    return error_sample(x, table, poly).relative_error
