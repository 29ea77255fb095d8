"""Singular factor T(s): local factors, direct and accelerated Euler products."""

from .accelerated import graded_local_factor, log_degree, log_local_factor, t_series_accelerated
from .euler import direct_tail_bound, t_series_direct, t_value_direct
from .local_factor import generic_local_factor, t_coefficient, t_coefficient_table, t_multiplicative
from .models import TAYLOR_ORDER, LocalFactorSeries, TSeries, TSeriesMethod
from .prime_zeta import prime_zeta, prime_zeta_series

__all__ = [
    "TAYLOR_ORDER",
    "LocalFactorSeries",
    "TSeries",
    "TSeriesMethod",
    "generic_local_factor",
    "t_coefficient",
    "t_multiplicative",
    "t_coefficient_table",
    "t_series_direct",
    "t_value_direct",
    "direct_tail_bound",
    "prime_zeta",
    "prime_zeta_series",
    "graded_local_factor",
    "log_local_factor",
    "log_degree",
    "t_series_accelerated",
]
