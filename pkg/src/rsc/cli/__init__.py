"""CLI package for rsc."""

from .main import build_parser, main
from .commands.count import cmd_count
from .commands.compute import cmd_delta, cmd_mainterm, cmd_meansquare, cmd_sieve, cmd_tconst
from .commands.pipeline import cmd_pipeline
from .utils import setup_logging

__all__ = [
    "main",
    "build_parser",
    "cmd_count",
    "cmd_sieve",
    "cmd_tconst",
    "cmd_mainterm",
    "cmd_delta",
    "cmd_meansquare",
    "cmd_pipeline",
    "setup_logging",
]
