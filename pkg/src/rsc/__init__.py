"""
rsc - cyclic subgroups of Z_l x Z_m x Z_n and their summatory function

Closed-form subgroup counts, an exact sieve for D(x), the main-term
polynomial x P(log x) from the Laurent expansion of the generating
Dirichlet series, the singular factor T(s) by two independent products,
and empirical diagnostics of the error term and its mean square.
"""

from .config import RunConfig, build_run_config
from .exceptions import RSCError
from .counts import c_rank2, c_rank3, c_rank_r, s_rank2
from .sieve import SummatoryTable, sieve_f
from .mainterm import MainTermPolynomial, residue_main_term
from .singular import TSeries, t_series_accelerated, t_series_direct
from .pipeline import run_pipeline
from .cli import main

__version__ = "0.1.0"
__all__ = [
    "RunConfig",
    "build_run_config",
    "RSCError",
    "c_rank2",
    "s_rank2",
    "c_rank3",
    "c_rank_r",
    "SummatoryTable",
    "sieve_f",
    "MainTermPolynomial",
    "residue_main_term",
    "TSeries",
    "t_series_direct",
    "t_series_accelerated",
    "run_pipeline",
    "main",
]
