"""Tests for the integer and multiplicative-function primitives."""

import math
import random

import numpy as np
import pytest

from rsc.arith import (
    Factorization,
    build_spf,
    divisors,
    euler_phi,
    factorize,
    gcd_lcm,
    is_prime,
    mobius,
    mu_star_phi,
    tau_k,
)
from rsc.exceptions import CapacityError, DomainError, InputError, WidthError


@pytest.fixture(scope="module")
def spf_small():
    return build_spf(10**5)


def _trial_division_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


class TestBuildSpf:
    """Smallest-prime-factor sieve."""

    def test_small_entries(self):
        table = build_spf(10)
        assert table[9] == 3
        assert table[7] == 7
        assert table[8] == 2
        assert table[10] == 2

    def test_large_prime_entry(self):
        table = build_spf(10**6)
        assert table[999983] == 999983
        assert _trial_division_is_prime(999983)

    def test_invariants(self, spf_small):
        """spf[k] divides k, is prime, and is either <= sqrt(k) or k itself."""
        for k in range(2, 5000):
            p = spf_small[k]
            assert k % p == 0
            assert _trial_division_is_prime(p)
            assert p * p <= k or p == k

    def test_primes_listing(self):
        table = build_spf(30)
        assert table.primes().tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    @pytest.mark.parametrize("limit", [0, 1, 2**32 + 1])
    def test_limit_out_of_range(self, limit):
        with pytest.raises(CapacityError):
            build_spf(limit)


class TestIsPrime:
    """Deterministic Miller-Rabin."""

    def test_agrees_with_trial_division(self):
        for n in range(0, 3000):
            assert is_prime(n) == _trial_division_is_prime(n)

    def test_carmichael_and_strong_pseudoprimes(self):
        for n in (561, 1105, 1729, 2047, 3215031751, 3825123056546413051):
            assert not is_prime(n)

    def test_large_primes(self):
        assert is_prime(2**61 - 1)
        assert is_prime(18446744073709551557)
        assert not is_prime(2**62 - 1)


class TestFactorize:
    """Canonical factorization."""

    def test_one(self):
        assert factorize(1).factors == ()

    def test_twelve(self):
        assert factorize(12).factors == ((2, 2), (3, 1))

    def test_large_round_trip(self):
        n = 2**62 - 1
        f = factorize(n)
        assert f.product() == n
        assert f.is_canonical()

    def test_with_table_matches_without(self, spf_small):
        for n in range(1, 3000):
            assert factorize(n, spf_small) == factorize(n)

    def test_product_invariant(self, spf_small):
        for n in range(1, 10**5 + 1):
            assert factorize(n, spf_small).product() == n

    def test_zero_is_domain_error(self):
        with pytest.raises(DomainError):
            factorize(0)

    def test_beyond_table(self, spf_small):
        with pytest.raises(InputError):
            factorize(10**5 + 1, spf_small)

    def test_beyond_63_bits(self):
        with pytest.raises(CapacityError):
            factorize(2**63)

    def test_exponent_of(self):
        f = factorize(360)
        assert f.exponent_of(2) == 3
        assert f.exponent_of(7) == 0


class TestFunctions:
    """Totient, divisor functions and friends."""

    def test_phi_examples(self):
        assert euler_phi(factorize(1)) == 1
        assert euler_phi(factorize(12)) == 4
        assert euler_phi(factorize(81)) == 54
        assert 54 == sum(1 for k in range(1, 82) if math.gcd(k, 81) == 1)

    def test_tau_k_examples(self):
        assert tau_k(factorize(1), 6) == 1
        assert tau_k(factorize(7), 6) == 6
        assert tau_k(factorize(49), 6) == 21
        assert tau_k(factorize(12), 2) == 6

    def test_tau_k_width(self):
        big = Factorization(value=0, factors=tuple((p, 60) for p in (2, 3, 5, 7)))
        with pytest.raises(WidthError):
            tau_k(big, 24)

    def test_tau_k_needs_positive_k(self):
        with pytest.raises(DomainError):
            tau_k(factorize(6), 0)

    def test_gcd_lcm(self):
        assert gcd_lcm(4, 6) == (2, 12)
        assert gcd_lcm(1, 35) == (1, 35)
        assert gcd_lcm(2**3, 2**5) == (2**3, 2**5)

    def test_lcm_width(self):
        with pytest.raises(WidthError):
            gcd_lcm(2**62 - 1, 2**61 - 1)

    def test_multiplicativity(self):
        rng = random.Random(7)
        checked = 0
        while checked < 300:
            a, b = rng.randint(1, 1000), rng.randint(1, 1000)
            if math.gcd(a, b) != 1:
                continue
            fa, fb, fab = factorize(a), factorize(b), factorize(a * b)
            assert euler_phi(fab) == euler_phi(fa) * euler_phi(fb)
            for k in (2, 3, 6):
                assert tau_k(fab, k) == tau_k(fa, k) * tau_k(fb, k)
            checked += 1

    def test_phi_divisor_sum(self, spf_small):
        for n in range(1, 10**4 + 1):
            f = factorize(n, spf_small)
            assert sum(euler_phi(factorize(d, spf_small)) for d in divisors(f)) == n

    def test_mobius_and_mu_star_phi(self):
        for n in range(1, 500):
            f = factorize(n)
            direct = sum(
                mobius(factorize(d)) * euler_phi(factorize(n // d)) for d in divisors(f)
            )
            assert mu_star_phi(f) == direct

    def test_divisors_sorted(self):
        assert divisors(factorize(12)) == [1, 2, 3, 4, 6, 12]
        assert np.all(np.diff(divisors(factorize(720))) > 0)
