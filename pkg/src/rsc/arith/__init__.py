"""Integer and multiplicative-function primitives."""

from .functions import divisors, euler_phi, gcd_lcm, mobius, mu_star_phi, tau_k
from .models import Factorization, SpfTable
from .primes import build_spf, factorize, is_prime, next_prime, primes_up_to

__all__ = [
    "Factorization",
    "SpfTable",
    "build_spf",
    "factorize",
    "is_prime",
    "next_prime",
    "primes_up_to",
    "euler_phi",
    "tau_k",
    "gcd_lcm",
    "mobius",
    "mu_star_phi",
    "divisors",
]
