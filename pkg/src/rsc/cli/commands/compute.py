"""Single-stage commands: sieve, tconst, mainterm, delta, meansquare."""

from mpmath import mp

from ...analysis import error_profile
from ...config import OutputFormat, load_run_config
from ...pipeline import (
    compute_direct_series,
    compute_fits,
    compute_main_term,
    compute_profile,
    compute_t_series,
    compute_table,
)
from ...pipeline import gates
from ...pipeline.runner import QUADRATURE_CHECK_T
from ...report import (
    DELTA_HEADER,
    MEANSQ_HEADER,
    SIEVE_HEADER,
    analysis_report,
    delta_rows,
    main_term_report,
    meansq_rows,
    sieve_rows,
    sieve_summary,
    t_series_report,
)
from ...singular import generic_local_factor
from ..utils import build_report, console, emit, print_gates, require_gates, save_checkpoints


def _finish(config, results, checks, rows=None, header=None):
    checks = [g for g in checks if g is not None]
    out = console(config)
    if checks:
        print_gates(checks, file=out)
    emit(config, build_report(config, results, checks), rows, header)
    require_gates(checks)


def cmd_sieve(args):
    """f(k) and D(k) up to x_max."""
    config = load_run_config(args)
    out = console(config)
    table = compute_table(config, keep_table=True if config.format is OutputFormat.CSV else None)
    print(f"📊 D({table.x_max}) = {table.total}", file=out)
    save_checkpoints(config, table)

    checks = []
    if config.verify:
        lf = generic_local_factor(config.truncation_E)
        checks = [
            gates.gate_small_values(table),
            gates.gate_sieve_vs_direct(table),
            gates.gate_dirichlet_identity(table, lf),
        ]
    rows = sieve_rows(table) if config.format is OutputFormat.CSV else None
    _finish(config, {"sieve": sieve_summary(table).model_dump(mode="json")}, checks, rows, SIEVE_HEADER)


def cmd_tconst(args):
    """T(1+u) Taylor coefficients by the accelerated product."""
    config = load_run_config(args)
    out = console(config)
    series = compute_t_series(config)
    print(f"📊 T(1) = {mp.nstr(series.T1, 20)}", file=out)
    print(f"📊 T'(1) = {mp.nstr(series.c[1], 20)}", file=out)

    results = {"t_series": t_series_report(series).model_dump(mode="json")}
    checks = []
    if config.verify:
        direct = compute_direct_series(config)
        results["t_series_direct"] = t_series_report(direct).model_dump(mode="json")
        checks = [
            *gates.gate_t_series_agreement(series, direct),
            gates.gate_finite_difference(direct, generic_local_factor(config.truncation_E)),
        ]
    _finish(config, results, checks)


def cmd_mainterm(args):
    """A_0 .. A_9 of the main-term polynomial."""
    config = load_run_config(args)
    out = console(config)
    series = compute_t_series(config)
    poly = compute_main_term(config, series)
    with mp.workdps(poly.precision_digits):
        for j in (9, 8, 0):
            print(f"📊 A{j} = {mp.nstr(poly.A[j], 20)}", file=out)

    checks = []
    if config.verify:
        checks = [gates.gate_residue_anchors(), gates.gate_leading_coefficient(poly, series)]
    results = {
        "t_series": t_series_report(series).model_dump(mode="json"),
        "main_term": main_term_report(poly).model_dump(mode="json"),
    }
    _finish(config, results, checks)


def cmd_delta(args):
    """delta(x) at the checkpoint grid and per-octave maxima."""
    config = load_run_config(args)
    out = console(config)
    table = compute_table(config)
    poly = compute_main_term(config, compute_t_series(config))
    profile = error_profile(table, poly, meansq_points=())
    print(f"📊 max |delta(x)|/D(x) = {profile.max_relative_error():.3e}", file=out)

    checks = []
    if config.verify:
        checks = [gates.gate_relative_error(profile, config.x_max), gates.gate_octave_decay(profile, config.x_max)]
    results = {"analysis": analysis_report(profile).model_dump(mode="json")}
    _finish(config, results, checks, delta_rows(profile), DELTA_HEADER)


def cmd_meansquare(args):
    """M(T) at powers of two up to x_max and the fitted exponent."""
    config = load_run_config(args)
    out = console(config)
    table = compute_table(config, keep_table=True)
    poly = compute_main_term(config, compute_t_series(config))
    profile = compute_profile(table, poly)
    meansq_fit, delta_fit = compute_fits(profile)
    if meansq_fit is not None:
        print(f"📊 alpha = {meansq_fit.alpha:.4f} (r2 {meansq_fit.r2:.6f})", file=out)
    else:
        print("📊 too few points for an exponent fit", file=out)

    checks = []
    if config.verify:
        T = min(QUADRATURE_CHECK_T, 1 << (config.x_max.bit_length() - 1))
        checks = [
            gates.gate_meansq_monotone(profile),
            gates.gate_meansq_exponent(meansq_fit),
            gates.gate_quadrature_refinement(table, poly, T),
        ]
    results = {"analysis": analysis_report(profile, meansq_fit, delta_fit).model_dump(mode="json")}
    _finish(config, results, checks, meansq_rows(profile.meansq), MEANSQ_HEADER)
