"""End-to-end run: sieve, T-series, main term, error analysis, acceptance gates."""

import logging
from dataclasses import asdict
from typing import Optional

from ..analysis import ErrorProfile, dyadic_points, error_profile, fit_delta_exponent, fit_exponent
from ..config import RunConfig
from ..exceptions import InputError
from ..mainterm import (
    DEFAULT_TRUNCATION,
    WORKING_GUARD_DIGITS,
    MainTermPolynomial,
    StieltjesTable,
    residue_main_term,
    stieltjes_table,
)
from ..report import (
    GateReport,
    RunReport,
    analysis_report,
    main_term_report,
    sieve_summary,
    t_series_report,
)
from ..sieve import SummatoryTable, sieve_f
from ..singular import (
    TSeries,
    generic_local_factor,
    t_series_accelerated,
    t_series_direct,
)
from . import gates
from .models import PipelineReport

logger = logging.getLogger(__name__)

KEEP_TABLE_LIMIT = 2 * 10**7
T_SERIES_DIGITS = 30
ACCELERATION_CUTOFF = 1000
QUADRATURE_CHECK_T = 2**20


def compute_table(config: RunConfig, keep_table: Optional[bool] = None) -> SummatoryTable:
    """Sieve up to x_max; the full table is kept up to KEEP_TABLE_LIMIT."""
    if keep_table is None:
        keep_table = config.x_max <= KEEP_TABLE_LIMIT
    table = sieve_f(
        config.x_max,
        block_size=config.block_size,
        threads=config.threads,
        keep_table=keep_table,
        samples=(config.x_max,),
    )
    table.validate()
    return table


def t_series_digits(config: RunConfig) -> int:
    return min(config.precision_digits, T_SERIES_DIGITS)


def compute_t_series(config: RunConfig) -> TSeries:
    return t_series_accelerated(
        E=config.truncation_E,
        precision=t_series_digits(config),
        cutoff=ACCELERATION_CUTOFF,
    )


def compute_direct_series(config: RunConfig) -> TSeries:
    return t_series_direct(config.prime_cutoff, E=config.truncation_E, precision=t_series_digits(config))


def compute_main_term(
    config: RunConfig, series: TSeries, table: Optional[StieltjesTable] = None
) -> MainTermPolynomial:
    poly = residue_main_term(series.c, precision=config.precision_digits, table=table)
    poly.check()
    return poly


def compute_profile(table: SummatoryTable, poly: MainTermPolynomial) -> ErrorProfile:
    points = list(dyadic_points(table.x_max))
    return error_profile(table, poly, meansq_points=points)


def compute_fits(profile: ErrorProfile):
    lo, hi = gates.MEANSQ_RANGE
    window = [(T, M) for T, M in profile.meansq if lo <= T.bit_length() - 1 <= hi]
    meansq_fit = delta_fit = None
    try:
        meansq_fit = fit_exponent(window)
    except InputError as e:
        logger.info("mean-square fit skipped: %s", e.detail)
    octaves = [o for o in profile.dyadic_max if o.k >= 4 and o.max_abs_delta > 0]
    try:
        delta_fit = fit_delta_exponent(octaves)
    except InputError as e:
        logger.info("octave fit skipped: %s", e.detail)
    return meansq_fit, delta_fit


def run_pipeline(config: RunConfig) -> PipelineReport:
    """sieve -> tconst (accelerated, cross-checked) -> mainterm -> delta -> meansquare, then every gate."""
    lf = generic_local_factor(config.truncation_E)

    logger.info("sieving up to %d", config.x_max)
    table = compute_table(config)

    series = compute_t_series(config)
    direct = compute_direct_series(config)
    refined = None
    if not lf.terminates:
        refined_E = min(config.truncation_E + 2, 24)
        refined = t_series_accelerated(E=refined_E, precision=t_series_digits(config), cutoff=ACCELERATION_CUTOFF)

    # one table serves the main term and the anchor gate
    digits = max(config.precision_digits, gates.ANCHOR_PRECISION) + WORKING_GUARD_DIGITS
    gammas = stieltjes_table(DEFAULT_TRUNCATION, digits)
    poly = compute_main_term(config, series, gammas)
    profile = compute_profile(table, poly)
    meansq_fit, delta_fit = compute_fits(profile)

    results = [
        gates.gate_small_values(table),
        gates.gate_sieve_vs_direct(table),
        gates.gate_dirichlet_identity(table, lf),
        *gates.gate_t_series_agreement(series, direct),
        gates.gate_finite_difference(direct, lf),
        gates.gate_truncation_refinement(series, refined, lf),
        gates.gate_residue_anchors(gammas=gammas),
        gates.gate_leading_coefficient(poly, series),
        gates.gate_relative_error(profile, config.x_max),
        gates.gate_octave_decay(profile, config.x_max),
        gates.gate_meansq_monotone(profile),
        gates.gate_meansq_exponent(meansq_fit),
        gates.gate_quadrature_refinement(table, poly, min(QUADRATURE_CHECK_T, 1 << (config.x_max.bit_length() - 1))),
    ]
    report = PipelineReport(
        table=table,
        t_series=series,
        poly=poly,
        profile=profile,
        direct_series=direct,
        meansq_fit=meansq_fit,
        delta_fit=delta_fit,
        gates=[g for g in results if g is not None],
    )
    for g in report.gates:
        logger.info("gate %s: %s (%s)", g.name, "pass" if g.passed else "FAIL", g.measured)
    return report


def to_run_report(config: RunConfig, report: PipelineReport) -> RunReport:
    results = {
        "sieve": sieve_summary(report.table).model_dump(mode="json"),
        "t_series": t_series_report(report.t_series).model_dump(mode="json"),
        "main_term": main_term_report(report.poly).model_dump(mode="json"),
        "analysis": analysis_report(report.profile, report.meansq_fit, report.delta_fit).model_dump(mode="json"),
    }
    if report.direct_series is not None:
        results["t_series_direct"] = t_series_report(report.direct_series).model_dump(mode="json")
    return RunReport(
        command=config.command.value,
        config=config.fingerprint(),
        results=results,
        gates=[GateReport(**asdict(g)) for g in report.gates],
        passed=report.passed,
    )
