"""Tests for the multiplicative sieve and its oracles."""

import random

import numpy as np
import pytest

from rsc.arith import factorize, tau_k
from rsc.counts import c_rank3
from rsc.exceptions import CapacityError, DomainError, InputError
from rsc.sieve import (
    Checkpoint,
    checkpoint_grid,
    direct_f,
    dirichlet_convolve,
    dirichlet_identity_check,
    f_prime_power,
    growth_report,
    iter_blocks,
    multiplicative_spot_check,
    read_checkpoints,
    sieve_f,
    write_checkpoints,
)
from rsc.sieve.oracles import _ordered_triples

# t(p^j) for the primes below 31, from the local factor 1 - 6X^2 + (6 - 5p)X^3 + ...
SMALL_T = {
    2: 0, 4: -6, 8: -4, 16: 15,
    3: 0, 9: -6, 27: -9,
    5: 0, 25: -6,
    7: 0, 11: 0, 13: 0, 17: 0, 19: 0, 23: 0, 29: 0,
}


@pytest.fixture(scope="module")
def table_5000():
    return sieve_f(5000, block_size=1024)


class TestPrimePowers:
    """f(p^e) from the exact local polynomials."""

    def test_examples(self):
        assert f_prime_power(2, 0) == 1
        assert f_prime_power(101, 1) == 6
        assert f_prime_power(2, 2) == 21
        assert f_prime_power(3, 2) == 24
        assert f_prime_power(2, 3) == 56
        assert f_prime_power(2, 4) == 9 * 4 + 27 * 2 + 39

    def test_matches_literal_sum(self):
        from rsc.counts import c_rank3

        for p in (2, 3, 5):
            for e in range(6):
                literal = sum(
                    c_rank3(p**a, p**b, p ** (e - a - b))
                    for a in range(e + 1)
                    for b in range(e - a + 1)
                )
                assert f_prime_power(p, e) == literal

    def test_non_prime(self):
        with pytest.raises(DomainError):
            f_prime_power(9, 1)


class TestSieve:
    """sieve_f against its definition."""

    def test_small_summatory_values(self):
        assert sieve_f(1).total == 1
        assert sieve_f(2).total == 7
        table = sieve_f(4)
        assert table.total == 34
        assert table.f[1:].tolist() == [1, 6, 6, 21]

    def test_matches_direct_f(self, table_5000):
        for k in range(1, 5001):
            assert table_5000.f_at(k) == direct_f(k)

    def test_direct_f_examples(self):
        assert direct_f(1) == 1
        assert direct_f(6) == 36
        assert direct_f(8) == f_prime_power(2, 3)

    def test_direct_f_sums_every_ordered_triple(self):
        assert list(_ordered_triples(1)) == [(1, 1, 1)]
        for k in (4, 12, 360, 4096):
            triples = list(_ordered_triples(k))
            assert len(triples) == len(set(triples)) == tau_k(factorize(k), 3)
            assert all(l * m * n == k for l, m, n in triples)
        assert direct_f(12) == sum(c_rank3(l, m, n) for l, m, n in _ordered_triples(12))

    def test_table_validates(self, table_5000):
        table_5000.validate()
        assert table_5000.D_at(5000) == table_5000.total
        assert np.all(np.diff(table_5000.D[1:]) > 0)

    def test_multiplicative_extension(self):
        table = sieve_f(20000, block_size=4096)
        for k in range(1, 20001):
            expected = 1
            for p, e in factorize(k):
                expected *= f_prime_power(p, e)
            assert table.f_at(k) == expected

    def test_multiplicativity_spot_check(self):
        table = sieve_f(10**4)
        rng = random.Random(3)
        pairs = [(rng.randint(1, 100), rng.randint(1, 100)) for _ in range(1000)]
        assert multiplicative_spot_check(table, pairs) is None

    def test_checkpoints(self, table_5000):
        points = {cp.x for cp in table_5000.checkpoints}
        assert {1, 2, 4, 8, 10, 100, 1000, 4096}.issubset(points)
        for cp in table_5000.checkpoints:
            assert cp.D == int(table_5000.D[cp.x])

    def test_average_order_eventually_increasing(self):
        table = sieve_f(2**16, block_size=4096)
        dyadic = [cp for cp in table.checkpoints if cp.x & (cp.x - 1) == 0]
        assert [cp.x for cp in dyadic] == [2**j for j in range(17)]
        ratios = [cp.D / cp.x for cp in dyadic]
        assert all(b > a for a, b in zip(ratios, ratios[1:]))

    def test_samples_added_to_grid(self):
        assert checkpoint_grid(20, samples=[7, 25]) == [1, 2, 4, 7, 8, 10, 16]

    def test_streaming_matches_table(self, table_5000):
        streamed = sieve_f(5000, block_size=1024, keep_table=False)
        assert streamed.f is None
        assert streamed.total == table_5000.total
        assert streamed.checkpoints == table_5000.checkpoints
        with pytest.raises(InputError):
            streamed.D_at(4999)

    def test_blocks_are_ordered_and_cover_range(self):
        blocks = list(iter_blocks(10000, block_size=1500))
        assert blocks[0].lo == 1
        assert blocks[-1].hi == 10001
        for left, right in zip(blocks, blocks[1:]):
            assert left.hi == right.lo

    def test_thread_count_does_not_change_results(self):
        single = sieve_f(30000, block_size=4096, threads=1)
        multi = sieve_f(30000, block_size=4096, threads=3)
        assert np.array_equal(single.f, multi.f)
        assert np.array_equal(single.D, multi.D)
        assert single.checkpoints == multi.checkpoints

    def test_capacity(self):
        with pytest.raises(CapacityError):
            sieve_f(10**8 + 1)

    def test_growth_report(self, table_5000):
        report = growth_report(table_5000)
        assert report.ratio == pytest.approx(table_5000.growth.ratio)
        assert report.k == table_5000.growth.k
        assert report.k < 5000

    def test_out_of_range_lookup(self, table_5000):
        with pytest.raises(InputError):
            table_5000.D_at(5001)


class TestDirichletIdentity:
    """f = tau_6 * zeta(2s-1)^3 * zeta(3s-2) * T coefficientwise."""

    def test_convolution_with_unit(self):
        a = np.array([0, 1, 2, 3, 4, 5], dtype=np.int64)
        unit = np.array([0, 1, 0, 0, 0, 0], dtype=np.int64)
        assert np.array_equal(dirichlet_convolve(a, unit), a)

    def test_small_range(self):
        assert dirichlet_identity_check(1, {})
        assert dirichlet_identity_check(30, SMALL_T)

    def test_wrong_coefficient_detected(self):
        broken = dict(SMALL_T, **{4: -5})
        assert not dirichlet_identity_check(30, broken)

    def test_missing_coefficient(self):
        partial = {k: v for k, v in SMALL_T.items() if k != 16}
        with pytest.raises(InputError):
            dirichlet_identity_check(30, partial)


class TestCheckpointFiles:
    """Binary checkpoint round trip."""

    def test_write_and_read(self, tmp_path):
        points = [Checkpoint(x=1, D=1), Checkpoint(x=2**40, D=3 * 2**70 + 12345)]
        path = write_checkpoints(tmp_path / "cp.bin", points)
        assert path.stat().st_size == 48
        assert read_checkpoints(path) == points

    def test_truncated_file(self, tmp_path):
        path = tmp_path / "bad.bin"
        path.write_bytes(b"\x00" * 10)
        with pytest.raises(InputError):
            read_checkpoints(path)
