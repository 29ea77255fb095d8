"""Error-term diagnostics: delta(x), its mean square and exponent fits."""

from .error_term import delta, delta_values, dyadic_max_delta, error_sample, relative_error
from .fits import fit_delta_exponent, fit_exponent, partial_exponents
from .mean_square import mean_square, mean_square_curve
from .models import ErrorProfile, ErrorSample, FitResult, OctaveMax
from .profile import dyadic_points, error_profile

__all__ = [
    "ErrorProfile",
    "ErrorSample",
    "FitResult",
    "OctaveMax",
    "delta",
    "delta_values",
    "error_sample",
    "relative_error",
    "dyadic_max_delta",
    "mean_square",
    "mean_square_curve",
    "fit_exponent",
    "fit_delta_exponent",
    "partial_exponents",
    "dyadic_points",
    "error_profile",
]
