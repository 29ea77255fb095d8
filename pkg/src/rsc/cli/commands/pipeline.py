"""End-to-end verification run."""

from mpmath import mp

from ...config import load_run_config
from ...pipeline import run_pipeline, to_run_report
from ..utils import console, emit, print_gates, require_gates, save_checkpoints


def cmd_pipeline(args):
    """sieve -> tconst -> mainterm -> delta -> meansquare, then every acceptance gate."""
    config = load_run_config(args)
    out = console(config)
    print(f"🚀 Running the full pipeline up to x = {config.x_max}", file=out)

    report = run_pipeline(config)
    save_checkpoints(config, report.table)
    with mp.workdps(report.poly.precision_digits):
        print(f"📊 T(1) = {mp.nstr(report.t_series.T1, 20)}", file=out)
        print(f"📊 A9 = {mp.nstr(report.poly.A[9], 20)}", file=out)
    print(f"📊 max relative error = {report.profile.max_relative_error():.3e}", file=out)
    if report.meansq_fit is not None:
        print(f"📊 mean-square exponent = {report.meansq_fit.alpha:.4f}", file=out)

    print_gates(report.gates, file=out)
    emit(config, to_run_report(config, report))
    require_gates(report.gates)
    print(f"✅ All {len(report.gates)} gates passed", file=out)
