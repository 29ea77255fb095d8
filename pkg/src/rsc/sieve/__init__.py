"""Multiplicative sieve for f(k) and the summatory function D(x)."""

from .engine import (
    block_ranges,
    checkpoint_grid,
    f_prime_power,
    growth_report,
    iter_blocks,
    multiplicative_spot_check,
    sieve_f,
)
from .io import read_checkpoints, write_checkpoints
from .models import Checkpoint, GrowthReport, SieveBlock, SummatoryTable
from .oracles import direct_f, dirichlet_convolve, dirichlet_identity_check

__all__ = [
    "Checkpoint",
    "GrowthReport",
    "SieveBlock",
    "SummatoryTable",
    "f_prime_power",
    "sieve_f",
    "iter_blocks",
    "block_ranges",
    "checkpoint_grid",
    "growth_report",
    "multiplicative_spot_check",
    "direct_f",
    "dirichlet_convolve",
    "dirichlet_identity_check",
    "read_checkpoints",
    "write_checkpoints",
]
