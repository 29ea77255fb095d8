"""Run configuration: defaults, YAML file, RSC_ environment, command-line flags."""

import os
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import yaml
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from .exceptions import UsageError

ENV_PREFIX = "RSC_"

X_MAX_CAPACITY = 10**8


class Command(str, Enum):
    """Commands a run can execute."""

    COUNT = "count"
    SIEVE = "sieve"
    TCONST = "tconst"
    MAINTERM = "mainterm"
    DELTA = "delta"
    MEANSQUARE = "meansquare"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


CSV_COMMANDS = (Command.SIEVE, Command.DELTA, Command.MEANSQUARE)


class RunConfig(BaseModel):
    """Validated configuration shared by every command."""

    model_config = ConfigDict(frozen=True, use_enum_values=False, extra="forbid")

    command: Command = Command.VERIFY
    x_max: int = 10**6
    precision_digits: int = 60
    prime_cutoff: int = 10**6
    truncation_E: int = 16
    output_path: Optional[Path] = None
    checkpoints_path: Optional[Path] = None
    format: OutputFormat = OutputFormat.JSON
    threads: int = 1
    block_size: int = 2**22
    verify: bool = False

    @field_validator("x_max")
    @classmethod
    def _check_x_max(cls, v: int) -> int:
        if not 1 <= v <= X_MAX_CAPACITY:
            raise ValueError(f"x_max must lie in [1, {X_MAX_CAPACITY}]")
        return v

    @field_validator("precision_digits")
    @classmethod
    def _check_precision(cls, v: int) -> int:
        if not 10 <= v <= 400:
            raise ValueError("precision_digits must lie in [10, 400]")
        return v

    @field_validator("prime_cutoff")
    @classmethod
    def _check_prime_cutoff(cls, v: int) -> int:
        if not 10**3 <= v <= 10**8:
            raise ValueError("prime_cutoff must lie in [1000, 10^8]")
        return v

    @field_validator("truncation_E")
    @classmethod
    def _check_truncation(cls, v: int) -> int:
        if not 4 <= v <= 24:
            raise ValueError("truncation_E must lie in [4, 24]")
        return v

    @field_validator("threads")
    @classmethod
    def _check_threads(cls, v: int) -> int:
        if not 1 <= v <= 256:
            raise ValueError("threads must lie in [1, 256]")
        return v

    @field_validator("block_size")
    @classmethod
    def _check_block_size(cls, v: int) -> int:
        if not 2**10 <= v <= 2**26:
            raise ValueError("block_size must lie in [2^10, 2^26]")
        return v

    @model_validator(mode="after")
    def _check_combinations(self) -> "RunConfig":
        needs_t_series = self.command in (
            Command.TCONST,
            Command.MAINTERM,
            Command.DELTA,
            Command.MEANSQUARE,
            Command.VERIFY,
        )
        if needs_t_series and self.truncation_E < 10:
            raise ValueError("T-series commands need truncation_E >= 10")
        if self.format is OutputFormat.CSV:
            if self.command not in CSV_COMMANDS:
                raise ValueError(f"{self.command.value} has no CSV form")
            if self.output_path is None:
                raise ValueError("CSV output needs an output path")
        return self

    def fingerprint(self) -> Dict[str, Any]:
        """Canonical, output-relevant settings embedded in every report."""
        data = self.model_dump(mode="json", exclude={"threads", "output_path", "checkpoints_path", "verify"})
        return dict(sorted(data.items()))


def _env_overrides(environ: Mapping[str, str]) -> Dict[str, Any]:
    overrides = {}
    for name in RunConfig.model_fields:
        key = ENV_PREFIX + name.upper()
        if key in environ:
            overrides[name] = environ[key]
    return overrides


def _load_yaml(path: Path) -> Dict[str, Any]:
    if not path.exists():
        raise UsageError(f"config file not found: {path}", module="config")
    try:
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise UsageError(f"invalid YAML in {path}: {e}", module="config")
    if not isinstance(data, dict):
        raise UsageError(f"{path} must contain a mapping", module="config")
    return data


def build_run_config(
    flags: Optional[Mapping[str, Any]] = None,
    config_file: Optional[Path] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """Merge defaults, YAML file, environment and flags (in that priority order).

    Flags whose value is None are treated as not given.
    """
    environ = os.environ if environ is None else environ
    merged: Dict[str, Any] = {}
    if config_file is not None:
        merged.update(_load_yaml(Path(config_file)))
    merged.update(_env_overrides(environ))
    merged.update({k: v for k, v in (flags or {}).items() if v is not None})
    try:
        return RunConfig(**merged)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}"
            for err in e.errors()
        )
        raise UsageError(f"invalid configuration: {problems}", module="config")


def load_run_config(args) -> RunConfig:
    """Build a RunConfig from parsed argparse arguments."""
    flags = {
        name: getattr(args, name, None)
        for name in (
            "command",
            "x_max",
            "precision_digits",
            "prime_cutoff",
            "truncation_E",
            "output_path",
            "checkpoints_path",
            "format",
            "threads",
            "block_size",
        )
    }
    if getattr(args, "verify", False):
        flags["verify"] = True
    return build_run_config(flags, getattr(args, "config", None))
