"""Shared helpers for rsc commands: logging setup, report output, gate summaries."""

import logging
import os
import sys
from dataclasses import asdict
from typing import Any, Dict, Iterable, List, Optional, Sequence

from ..config import OutputFormat, RunConfig
from ..exceptions import AcceptanceError
from ..pipeline import GateResult
from ..report import GateReport, RunReport, render_json, write_csv, write_json
from ..sieve import SummatoryTable, write_checkpoints

LOG_LEVEL_ENV = "RSC_LOG_LEVEL"


def setup_logging(verbose: bool = False) -> None:
    """DEBUG with --verbose, else RSC_LOG_LEVEL, else WARNING."""
    level = "DEBUG" if verbose else os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def build_report(config: RunConfig, results: Dict[str, Any], gates: Sequence[GateResult] = ()) -> RunReport:
    return RunReport(
        command=config.command.value,
        config=config.fingerprint(),
        results=results,
        gates=[GateReport(**asdict(g)) for g in gates],
        passed=all(g.passed for g in gates) if gates else None,
    )


def emit(
    config: RunConfig,
    report: RunReport,
    rows: Optional[Iterable[Sequence[Any]]] = None,
    header: Optional[Sequence[str]] = None,
) -> None:
    """Write the report as JSON (file or stdout) or the rows as CSV."""
    if config.format is OutputFormat.CSV:
        path = write_csv(rows, header, config.output_path)
        print(f"📁 CSV written to: {path}")
    elif config.output_path is not None:
        path = write_json(report, config.output_path)
        print(f"📁 Report written to: {path}")
    else:
        sys.stdout.write(render_json(report))


def save_checkpoints(config: RunConfig, table: SummatoryTable) -> None:
    """Write the sieve checkpoints when --checkpoints was given."""
    if config.checkpoints_path is None:
        return
    path = write_checkpoints(config.checkpoints_path, table.checkpoints)
    print(f"📁 {len(table.checkpoints)} checkpoints written to: {path}", file=console(config))


def console(config: RunConfig):
    """Human-readable lines go to stderr when the JSON report goes to stdout."""
    return sys.stderr if config.output_path is None else sys.stdout


def print_gates(gates: Sequence[GateResult], file=None) -> None:
    for g in gates:
        mark = "✅" if g.passed else "❌"
        line = f"{mark} {g.name}"
        if g.measured is not None:
            line += f": {g.measured}"
        if g.threshold is not None:
            line += f" (limit {g.threshold})"
        print(line, file=file)
        if g.detail and not g.passed:
            print(f"   {g.detail}", file=file)


def require_gates(gates: Sequence[GateResult]) -> None:
    """Raise AcceptanceError naming every failed gate."""
    failed: List[str] = [g.name for g in gates if not g.passed]
    if failed:
        raise AcceptanceError(
            f"{len(failed)} of {len(gates)} gates failed: {', '.join(failed)}",
            extra={"failed": failed},
            module="pipeline",
        )
