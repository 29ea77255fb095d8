"""End-to-end runs and acceptance gates."""

from .gates import gate_residue_anchors
from .models import GateResult, PipelineReport
from .runner import (
    compute_direct_series,
    compute_fits,
    compute_main_term,
    compute_profile,
    compute_t_series,
    compute_table,
    run_pipeline,
    to_run_report,
)

__all__ = [
    "GateResult",
    "PipelineReport",
    "compute_table",
    "compute_t_series",
    "compute_direct_series",
    "compute_fits",
    "compute_main_term",
    "compute_profile",
    "run_pipeline",
    "to_run_report",
    "gate_residue_anchors",
]
