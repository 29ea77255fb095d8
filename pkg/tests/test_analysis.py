"""Tests for delta(x), the mean-square integral and exponent fits."""

import math

import numpy as np
import pytest
from mpmath import mp, mpf

from rsc.analysis import (
    ErrorProfile,
    OctaveMax,
    delta,
    delta_values,
    dyadic_max_delta,
    error_profile,
    fit_delta_exponent,
    fit_exponent,
    mean_square,
    mean_square_curve,
    partial_exponents,
)
from rsc.exceptions import ConsistencyError, DomainError, InputError
from rsc.mainterm import MainTermPolynomial, residue_main_term, stieltjes_table
from rsc.sieve import SummatoryTable, sieve_f


def _linear_poly():
    """Main term x, i.e. A_0 = 1 and every other coefficient zero."""
    return MainTermPolynomial(A=(mpf(1),) + (mpf(0),) * 9, precision_digits=30)


def _square_table(x_max):
    """D(k) = k^2, f(k) = 2k - 1."""
    k = np.arange(x_max + 1, dtype=np.int64)
    D = k * k
    f = np.diff(D, prepend=0)
    f[0] = 0
    return SummatoryTable(x_max=x_max, f=f, D=D, total=int(D[-1]))


@pytest.fixture(scope="module")
def table():
    return sieve_f(2**12, block_size=1024)


@pytest.fixture(scope="module")
def unit_poly():
    return residue_main_term((1,) + (0,) * 9, precision=30, table=stieltjes_table(12, 40), N=12)


class TestDelta:
    """delta(x) = D(x) - x P(log x)."""

    def test_at_one(self, table, unit_poly):
        with mp.workdps(30):
            assert abs(delta(1, table, unit_poly) - (1 - unit_poly.A[0])) < mpf(10) ** -25

    def test_at_two(self, table):
        poly = _linear_poly()
        assert delta(2, table, poly) == 7 - 2

    def test_vectorised(self, table, unit_poly):
        xs = [1, 2, 10, 1000, 4096]
        values = delta_values(xs, table, unit_poly)
        for x, v in zip(xs, values):
            assert float(v) == pytest.approx(float(delta(x, table, unit_poly)), rel=1e-12, abs=1e-9)

    def test_out_of_range(self, table, unit_poly):
        with pytest.raises(InputError):
            delta(2**12 + 1, table, unit_poly)
        with pytest.raises(InputError):
            delta_values([5000], table, unit_poly)

    def test_streaming_table_rejected(self, unit_poly):
        streaming = sieve_f(1000, keep_table=False)
        assert float(delta(512, streaming, unit_poly)) == pytest.approx(
            float(delta(512, sieve_f(1000), unit_poly))
        )
        with pytest.raises(InputError):
            delta_values([10], streaming, unit_poly)


class TestOctaves:
    """Per-octave maxima."""

    def test_matches_brute_force(self, table, unit_poly):
        octaves = dyadic_max_delta(table, unit_poly)
        assert [o.k for o in octaves] == list(range(13))
        for o in octaves[:8]:
            xs = range(2**o.k, 2 ** (o.k + 1))
            expected = max(abs(float(delta(x, table, unit_poly))) for x in xs)
            assert o.max_abs_delta == pytest.approx(expected, rel=1e-9)

    def test_partial_last_octave(self, unit_poly):
        small = sieve_f(100)
        octaves = dyadic_max_delta(small, unit_poly)
        assert octaves[-1].k == 6
        assert 64 <= octaves[-1].x <= 100

    def test_scaled(self):
        assert OctaveMax(k=3, x=9, max_abs_delta=4.0).scaled == 0.5


class TestMeanSquare:
    """M(T) by Gauss-Legendre cells."""

    def test_empty_integral(self, table, unit_poly):
        assert mean_square(1, table, unit_poly) == 0.0

    def test_single_cell(self):
        # D(1) = 1 and main term x: integral of (1 - x)^2 over [1, 2]
        assert mean_square(2, _square_table(10), _linear_poly()) == pytest.approx(1 / 3, rel=1e-15)

    def test_exact_for_polynomial_integrand(self):
        table = _square_table(50)
        expected = 0.0
        for n in range(1, 50):
            a = n * n - n
            expected += (a**3 - (a - 1) ** 3) / 3
        assert mean_square(50, table, _linear_poly()) == pytest.approx(expected, rel=1e-14)

    def test_pinned_value_at_ten_thousand(self):
        # sum over n < 10^4 of ((n^2 - n)^3 - (n^2 - n - 1)^3) / 3, exactly
        assert mean_square(10**4, _square_table(10**4), _linear_poly()) == pytest.approx(
            19990001333333331333, rel=1e-14
        )

    def test_monotone(self, table, unit_poly):
        curve = mean_square_curve([1, 2, 16, 256, 1000, 4096], table, unit_poly)
        values = [M for _, M in curve]
        assert values[0] == 0.0
        assert all(b >= a for a, b in zip(values, values[1:]))
        assert curve[1][1] == pytest.approx(mean_square(2, table, unit_poly))

    def test_curve_matches_single_calls(self, table, unit_poly):
        curve = dict(mean_square_curve([100, 3000], table, unit_poly))
        assert curve[3000] == pytest.approx(mean_square(3000, table, unit_poly), rel=1e-15)

    def test_quadrature_refinement(self, table, unit_poly):
        base = mean_square(4096, table, unit_poly, order=8)
        fine = mean_square(4096, table, unit_poly, order=16)
        assert abs(fine - base) / base < 1e-6

    def test_errors(self, table, unit_poly):
        with pytest.raises(DomainError):
            mean_square(0, table, unit_poly)
        with pytest.raises(InputError):
            mean_square(2**12 + 1, table, unit_poly)
        with pytest.raises(InputError):
            mean_square(10, sieve_f(100, keep_table=False), unit_poly)


class TestFits:
    """Least-squares exponents."""

    def test_exact_power_law(self):
        points = [(2**k, float(2**k) ** 3) for k in range(10, 18)]
        fit = fit_exponent(points)
        assert fit.alpha == pytest.approx(3.0, abs=1e-9)
        assert fit.r2 == pytest.approx(1.0, abs=1e-12)

    def test_scale_invariance(self):
        points = [(2**k, 7.5 * float(2**k) ** 2.2) for k in range(10, 18)]
        scaled = [(T, 1e6 * M) for T, M in points]
        a, b = fit_exponent(points), fit_exponent(scaled)
        assert a.alpha == pytest.approx(2.2, abs=1e-6)
        assert b.alpha == pytest.approx(a.alpha, abs=1e-9)
        assert b.intercept - a.intercept == pytest.approx(math.log(1e6))

    def test_degenerate_input(self):
        with pytest.raises(InputError):
            fit_exponent([(2**k, 0.0 if k == 12 else 1.0) for k in range(10, 18)])
        with pytest.raises(InputError):
            fit_exponent([(2**k, 1.0) for k in range(5)])

    def test_delta_exponent(self):
        octaves = [OctaveMax(k=k, x=2**k, max_abs_delta=float(2**k) ** 0.75) for k in range(4, 12)]
        assert fit_delta_exponent(octaves).alpha == pytest.approx(0.75)

    def test_partial_exponents(self):
        rows = partial_exponents([(2, 4.0), (4, 16.0), (8, 64.0)])
        assert rows[0][2] is None
        assert rows[1][2] == pytest.approx(2.0)
        assert rows[2][2] == pytest.approx(2.0)


class TestProfile:
    """The assembled error profile."""

    def test_full_table(self, table, unit_poly):
        profile = error_profile(table, unit_poly)
        assert [s.x for s in profile.samples] == [cp.x for cp in table.checkpoints]
        assert profile.meansq[0] == (1, 0.0)
        assert profile.meansq[-1][0] == 4096
        assert len(profile.dyadic_max) == 13
        assert profile.max_relative_error() >= 0

    def test_streaming_table(self, unit_poly):
        profile = error_profile(sieve_f(1000, keep_table=False), unit_poly)
        assert profile.samples and not profile.meansq and not profile.dyadic_max

    def test_check(self):
        with pytest.raises(ConsistencyError):
            ErrorProfile(meansq=[(1, 0.0), (2, 3.0), (4, 2.0)]).check()
        with pytest.raises(ConsistencyError):
            ErrorProfile(meansq=[(1, 0.5)]).check()
