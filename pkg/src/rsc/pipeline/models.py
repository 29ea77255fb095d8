"""Data models for end-to-end runs and their acceptance gates."""

from dataclasses import dataclass, field
from typing import List, Optional

from ..analysis import ErrorProfile, FitResult
from ..mainterm import MainTermPolynomial
from ..sieve import SummatoryTable
from ..singular import TSeries


@dataclass(frozen=True)
class GateResult:
    """One named acceptance check with what it measured."""

    name: str
    passed: bool
    measured: Optional[str] = None
    threshold: Optional[str] = None
    detail: Optional[str] = None


@dataclass
class PipelineReport:
    table: SummatoryTable
    t_series: TSeries
    poly: MainTermPolynomial
    profile: ErrorProfile
    direct_series: Optional[TSeries] = None
    meansq_fit: Optional[FitResult] = None
    delta_fit: Optional[FitResult] = None
    gates: List[GateResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(g.passed for g in self.gates)

    @property
    def failed(self) -> List[GateResult]:
        return [g for g in self.gates if not g.passed]
