"""Laurent-series algebra at s = 1 and the main-term polynomial."""

from .laurent import LaurentSeries
from .models import MainTermPolynomial, StieltjesTable
from .residue import (
    DEFAULT_TRUNCATION,
    POLE_ORDER,
    WORKING_GUARD_DIGITS,
    eval_main,
    longdouble_coefficients,
    main_term_values,
    residue_main_term,
    zeta_laurent,
    zeta_product,
)
from .stieltjes import stieltjes, stieltjes_limit, stieltjes_table

__all__ = [
    "LaurentSeries",
    "MainTermPolynomial",
    "StieltjesTable",
    "POLE_ORDER",
    "DEFAULT_TRUNCATION",
    "WORKING_GUARD_DIGITS",
    "stieltjes",
    "stieltjes_limit",
    "stieltjes_table",
    "zeta_laurent",
    "zeta_product",
    "residue_main_term",
    "eval_main",
    "main_term_values",
    "longdouble_coefficients",
]
