"""Building, hashing and writing reports."""

import csv
import json
import logging
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Tuple

from mpmath import mp

from ..analysis import ErrorProfile, ErrorSample, FitResult, partial_exponents
from ..exceptions import InputError
from ..mainterm import MainTermPolynomial
from ..sieve import SummatoryTable
from ..singular import TSeries
from .models import AnalysisReport, FitReport, MainTermReport, RunReport, SieveSummary, TSeriesReport
from .utils import content_hash

logger = logging.getLogger(__name__)

SIEVE_HEADER = ("k", "f", "D")
DELTA_HEADER = ("x", "D", "main", "delta")
MEANSQ_HEADER = ("T", "M", "alpha_partial")


def _num(value: Any) -> str:
    """Deterministic decimal text for ints, floats and mpf values; strings pass through."""
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return mp.nstr(value, mp.dps)


def sieve_summary(table: SummatoryTable) -> SieveSummary:
    growth = table.growth
    return SieveSummary(
        x_max=table.x_max,
        D=str(table.total),
        checkpoints={str(cp.x): str(cp.D) for cp in table.checkpoints},
        growth_k=growth.k if growth else 1,
        growth_ratio=repr(growth.ratio) if growth else "1.0",
        growth_exponent=growth.exponent if growth else 0.9,
    )


def t_series_report(series: TSeries) -> TSeriesReport:
    with mp.workdps(series.precision_digits):
        return TSeriesReport(
            method=series.method.value,
            E=series.E,
            prime_cutoff=series.prime_cutoff,
            tail_bound=f"{series.tail_bound:.3e}",
            increment=None if series.increment is None else f"{series.increment:.3e}",
            c=[mp.nstr(c, series.precision_digits) for c in series.c],
        )


def main_term_report(poly: MainTermPolynomial) -> MainTermReport:
    with mp.workdps(poly.precision_digits):
        return MainTermReport(
            precision_digits=poly.precision_digits,
            truncation=poly.truncation,
            A=[mp.nstr(a, poly.precision_digits) for a in poly.A],
            t_series=[mp.nstr(c, poly.precision_digits) for c in poly.t_series],
        )


def _fit(fit: Optional[FitResult]) -> Optional[FitReport]:
    if fit is None:
        return None
    return FitReport(alpha=fit.alpha, intercept=fit.intercept, r2=fit.r2, points=fit.points)


def _sample_text(sample: ErrorSample) -> Tuple[str, str]:
    """main(x) and delta(x) at the digits they were computed with."""
    with mp.workdps(sample.precision_digits):
        return mp.nstr(sample.main, sample.precision_digits), mp.nstr(sample.delta, sample.precision_digits)


def analysis_report(
    profile: ErrorProfile,
    meansq_fit: Optional[FitResult] = None,
    delta_fit: Optional[FitResult] = None,
) -> AnalysisReport:
    return AnalysisReport(
        samples=[
            dict(zip(DELTA_HEADER, (str(s.x), str(s.D), *_sample_text(s))))
            for s in profile.samples
        ],
        max_relative_error=profile.max_relative_error(),
        octaves=[
            {"k": o.k, "x": o.x, "max_abs_delta": o.max_abs_delta, "scaled": o.scaled}
            for o in profile.dyadic_max
        ],
        meansq=[{"T": str(T), "M": _num(M)} for T, M in profile.meansq],
        meansq_fit=_fit(meansq_fit),
        delta_fit=_fit(delta_fit),
    )


def finalize(report: RunReport) -> RunReport:
    """Attach the SHA-256 of everything but the hash itself."""
    body = report.model_dump(mode="json", exclude={"content_hash"})
    return report.model_copy(update={"content_hash": content_hash(body)})


def render_json(report: RunReport) -> str:
    data = finalize(report).model_dump(mode="json")
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(report: RunReport, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_json(report), encoding="utf-8")
    logger.info("wrote %s", path)
    return path


def write_csv(rows: Iterable[Sequence[Any]], header: Sequence[str], path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if v is None else _num(v) for v in row])
    logger.info("wrote %s", path)
    return path


def sieve_rows(table: SummatoryTable):
    """(k, f(k), D(k)) for every k of a kept table."""
    if not table.has_table:
        raise InputError("CSV of f and D needs the full table, not a streaming run", module="report")
    for k in range(1, table.x_max + 1):
        yield k, int(table.f[k]), int(table.D[k])


def delta_rows(profile: ErrorProfile):
    for s in profile.samples:
        yield (s.x, s.D, *_sample_text(s))


def meansq_rows(points):
    return partial_exponents(points)
