"""Acceptance gates. Each returns a GateResult, or None when the run is too small for it."""

import logging
from typing import List, Optional

from mpmath import mp, mpf

from ..analysis import ErrorProfile, FitResult, mean_square
from ..exceptions import ConsistencyError
from ..mainterm import MainTermPolynomial, StieltjesTable, residue_main_term
from ..sieve import SummatoryTable, direct_f, dirichlet_identity_check
from ..singular import LocalFactorSeries, TSeries, t_coefficient_table, t_value_direct
from .models import GateResult

logger = logging.getLogger(__name__)

DIRECT_F_LIMIT = 5000
DIRICHLET_LIMIT = 10**4
C0_AGREEMENT = 5e-6
C1_AGREEMENT = 5e-4
FINITE_DIFFERENCE_STEP = 1e-4
FINITE_DIFFERENCE_AGREEMENT = 5e-4
RELATIVE_ERROR_X = 10**6
RELATIVE_ERROR_LIMIT = 0.02
OCTAVE_RANGE = (16, 23)
MEANSQ_RANGE = (14, 23)
MEANSQ_ALPHA_LIMIT = 2.65
QUADRATURE_AGREEMENT = 1e-6
LEADING_DENOMINATOR = 8709120
A8_DENOMINATOR = 967680
ANCHOR_PRECISION = 60


def _sci(value) -> str:
    return f"{float(value):.3e}"


def gate_small_values(table: SummatoryTable) -> Optional[GateResult]:
    if table.x_max < 4 or not table.has_table:
        return None
    got = (table.f_at(2), table.f_at(4), table.D_at(4))
    return GateResult(
        name="small_values",
        passed=got == (6, 21, 34),
        measured=str(list(got)),
        threshold="[6, 21, 34]",
    )


def gate_sieve_vs_direct(table: SummatoryTable, upto: int = DIRECT_F_LIMIT) -> Optional[GateResult]:
    if not table.has_table:
        return None
    upto = min(upto, table.x_max)
    bad = [k for k in range(1, upto + 1) if direct_f(k) != table.f_at(k)]
    return GateResult(
        name="sieve_vs_direct",
        passed=not bad,
        measured=f"{len(bad)} mismatches up to {upto}",
        threshold="0",
        detail=f"first mismatch at k = {bad[0]}" if bad else None,
    )


def gate_dirichlet_identity(
    table: SummatoryTable, lf: LocalFactorSeries, upto: int = DIRICHLET_LIMIT
) -> Optional[GateResult]:
    if not table.has_table:
        return None
    x = min(upto, table.x_max)
    ok = dirichlet_identity_check(x, t_coefficient_table(x, lf), table)
    return GateResult(name="dirichlet_identity", passed=ok, measured=f"checked k <= {x}")


def gate_t_series_agreement(accelerated: TSeries, direct: TSeries) -> List[GateResult]:
    # thresholds never drop below the direct product's own tail
    c0_limit = max(C0_AGREEMENT, 2 * direct.tail_bound)
    c1_limit = max(C1_AGREEMENT, 50.0 / direct.prime_cutoff)
    d0 = accelerated.relative_difference(direct, 0)
    d1 = accelerated.relative_difference(direct, 1)
    return [
        GateResult(name="t_series_c0", passed=bool(d0 < c0_limit), measured=_sci(d0), threshold=_sci(c0_limit)),
        GateResult(name="t_series_c1", passed=bool(d1 < c1_limit), measured=_sci(d1), threshold=_sci(c1_limit)),
    ]


def gate_finite_difference(direct: TSeries, lf: LocalFactorSeries) -> GateResult:
    h = FINITE_DIFFERENCE_STEP
    P = direct.prime_cutoff
    slope = (t_value_direct(1 + h, P, lf) - t_value_direct(1 - h, P, lf)) / (2 * h)
    rel = abs(slope - direct.c[1]) / abs(direct.c[1])
    return GateResult(
        name="finite_difference_c1",
        passed=bool(rel < FINITE_DIFFERENCE_AGREEMENT),
        measured=_sci(rel),
        threshold=_sci(FINITE_DIFFERENCE_AGREEMENT),
    )


def gate_truncation_refinement(
    series: TSeries, refined: Optional[TSeries], lf: Optional[LocalFactorSeries] = None
) -> GateResult:
    if refined is None:
        if lf is None or not lf.terminates:
            raise ConsistencyError("no refined T-series for a local factor that does not terminate", module="pipeline")
        return GateResult(
            name="truncation_refinement",
            passed=lf.E == series.E,
            measured="exact",
            detail=f"local factor has degree {lf.degree} < E = {lf.E}; raising E adds only zero terms",
        )
    rel = series.relative_difference(refined, 0)
    limit = mpf(10) ** (-(series.precision_digits - 5))
    return GateResult(
        name="truncation_refinement",
        passed=bool(rel <= limit),
        measured=_sci(rel),
        threshold=_sci(limit),
        detail=f"E = {series.E} vs E = {refined.E}",
    )


def gate_leading_coefficient(poly: MainTermPolynomial, series: TSeries) -> GateResult:
    digits = min(poly.precision_digits, series.precision_digits) - 5
    with mp.workdps(poly.precision_digits + 10):
        expected = mpf(series.c[0]) / LEADING_DENOMINATOR
        rel = abs(poly.A[-1] - expected) / expected
    return GateResult(
        name="leading_coefficient",
        passed=bool(poly.A[-1] > 0 and rel < mpf(10) ** -digits),
        measured=_sci(rel),
        threshold=f"1e-{digits}",
    )


def gate_residue_anchors(precision: int = ANCHOR_PRECISION, gammas: Optional[StieltjesTable] = None) -> GateResult:
    """A_9 = 1/8709120 and A_8 = (15 gamma - 1)/967680 for T = 1."""
    digits9, digits8 = 40, 35
    poly = residue_main_term((1,) + (0,) * 9, precision=precision, table=gammas)
    with mp.workdps(precision + 10):
        r9 = abs(poly.A[9] * LEADING_DENOMINATOR - 1)
        a8 = (15 * mp.euler - 1) / A8_DENOMINATOR
        r8 = abs(poly.A[8] - a8) / abs(a8)
        passed = bool(r9 < mpf(10) ** -digits9 and r8 < mpf(10) ** -digits8)
    return GateResult(
        name="residue_anchors",
        passed=passed,
        measured=f"A9 {_sci(r9)}, A8 {_sci(r8)}",
        threshold=f"1e-{digits9}, 1e-{digits8}",
    )


def gate_relative_error(profile: ErrorProfile, x_max: int) -> Optional[GateResult]:
    if x_max < RELATIVE_ERROR_X:
        return None
    sample = next((s for s in profile.samples if s.x == x_max), None)
    if sample is None:
        return GateResult(name="relative_error", passed=False, detail=f"no sample at x = {x_max}")
    rel = sample.relative_error
    return GateResult(
        name="relative_error",
        passed=rel < RELATIVE_ERROR_LIMIT,
        measured=_sci(rel),
        threshold=_sci(RELATIVE_ERROR_LIMIT),
        detail=f"x = {x_max}",
    )


def gate_octave_decay(profile: ErrorProfile, x_max: int) -> Optional[GateResult]:
    lo, hi = OCTAVE_RANGE
    full = [o for o in profile.dyadic_max if lo <= o.k <= hi and 2 ** (o.k + 1) - 1 <= x_max]
    if len(full) < 2:
        return None
    scaled = [o.scaled for o in full]
    return GateResult(
        name="octave_decay",
        passed=all(b < a for a, b in zip(scaled, scaled[1:])),
        measured=", ".join(f"{v:.4g}" for v in scaled),
        detail=f"octaves 2^{full[0].k} .. 2^{full[-1].k}",
    )


def gate_meansq_exponent(fit: Optional[FitResult]) -> Optional[GateResult]:
    if fit is None:
        return None
    return GateResult(
        name="meansq_exponent",
        passed=fit.alpha <= MEANSQ_ALPHA_LIMIT,
        measured=f"{fit.alpha:.4f}",
        threshold=f"{MEANSQ_ALPHA_LIMIT}",
        detail=f"r2 = {fit.r2:.6f} over {fit.points} points",
    )


def gate_meansq_monotone(profile: ErrorProfile) -> GateResult:
    try:
        profile.check()
    except ConsistencyError as e:
        return GateResult(name="meansq_monotone", passed=False, detail=e.detail)
    return GateResult(name="meansq_monotone", passed=True, measured=f"{len(profile.meansq)} points")


def gate_quadrature_refinement(
    table: SummatoryTable, poly: MainTermPolynomial, T: int
) -> Optional[GateResult]:
    if not table.has_table or T < 2:
        return None
    base = mean_square(T, table, poly, order=8)
    fine = mean_square(T, table, poly, order=16)
    rel = abs(fine - base) / fine if fine else 0.0
    return GateResult(
        name="quadrature_refinement",
        passed=rel < QUADRATURE_AGREEMENT,
        measured=_sci(rel),
        threshold=_sci(QUADRATURE_AGREEMENT),
        detail=f"T = {T}",
    )
