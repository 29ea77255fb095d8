"""JSON and CSV reports with embedded configuration and content hash."""

from .models import (
    AnalysisReport,
    FitReport,
    GateReport,
    MainTermReport,
    RunReport,
    SieveSummary,
    TSeriesReport,
)
from .utils import canonical_json, content_hash
from .writer import (
    DELTA_HEADER,
    MEANSQ_HEADER,
    SIEVE_HEADER,
    analysis_report,
    delta_rows,
    finalize,
    main_term_report,
    meansq_rows,
    render_json,
    sieve_rows,
    sieve_summary,
    t_series_report,
    write_csv,
    write_json,
)

__all__ = [
    "AnalysisReport",
    "FitReport",
    "GateReport",
    "MainTermReport",
    "RunReport",
    "SieveSummary",
    "TSeriesReport",
    "canonical_json",
    "content_hash",
    "SIEVE_HEADER",
    "DELTA_HEADER",
    "MEANSQ_HEADER",
    "sieve_summary",
    "t_series_report",
    "main_term_report",
    "analysis_report",
    "finalize",
    "render_json",
    "write_json",
    "write_csv",
    "sieve_rows",
    "delta_rows",
    "meansq_rows",
]
