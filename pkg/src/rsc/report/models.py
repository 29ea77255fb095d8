"""JSON report models. Extended-precision numbers travel as decimal strings."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict


class ReportModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class SieveSummary(ReportModel):
    x_max: int
    D: str
    checkpoints: Dict[str, str]
    growth_k: int
    growth_ratio: str
    growth_exponent: float


class TSeriesReport(ReportModel):
    method: str
    E: int
    prime_cutoff: int
    tail_bound: str
    increment: Optional[str] = None
    c: List[str]


class MainTermReport(ReportModel):
    precision_digits: int
    truncation: int
    A: List[str]
    t_series: List[str]


class FitReport(ReportModel):
    alpha: float
    intercept: float
    r2: float
    points: int


class AnalysisReport(ReportModel):
    samples: List[Dict[str, str]]
    max_relative_error: float
    octaves: List[Dict[str, Any]]
    meansq: List[Dict[str, str]]
    meansq_fit: Optional[FitReport] = None
    delta_fit: Optional[FitReport] = None


class GateReport(ReportModel):
    name: str
    passed: bool
    measured: Optional[str] = None
    threshold: Optional[str] = None
    detail: Optional[str] = None


class RunReport(ReportModel):
    """Top-level document written by every command."""

    command: str
    config: Dict[str, Any]
    results: Dict[str, Any]
    gates: List[GateReport] = []
    passed: Optional[bool] = None
    content_hash: Optional[str] = None
