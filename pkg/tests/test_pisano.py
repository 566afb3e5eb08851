import pytest

from fibmod.arith import sieve_upto
from fibmod.fib import fib_pair_mod
from fibmod.pisano import (
    lifting_exponent,
    pisano_direct,
    pisano_fast,
    prime_period,
    prime_power_period,
    profile,
    rank_of_apparition,
    zero_count,
    zero_count_direct,
)

from helpers import fib_upto, pisano_scan, rank_scan, zero_scan


class TestPisanoDirect:
    @pytest.mark.parametrize("m,period", [(1, 1), (2, 3), (5, 20), (7, 16), (10, 60)])
    def test_examples(self, m, period):
        assert pisano_direct(m) == period

    def test_matches_scan_oracle(self):
        for m in range(1, 400):
            assert pisano_direct(m) == pisano_scan(m)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            pisano_direct(0)


class TestPrimePeriod:
    def test_knowns(self):
        assert prime_period(2) == 3
        assert prime_period(5) == 20
        assert prime_period(7) == 16
        assert prime_period(11) == 10

    def test_matches_direct(self):
        for p in sieve_upto(2000):
            assert prime_period(p) == pisano_direct(p), p

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            prime_period(10)


class TestLiftingExponent:
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_examples(self, p):
        assert lifting_exponent(p) == 1

    def test_matches_exact_valuation(self):
        fib = fib_upto(2000)
        for p in sieve_upto(300):
            value = fib[prime_period(p)]
            a = 0
            while value % p == 0:
                value //= p
                a += 1
            assert lifting_exponent(p) == a, p


class TestPrimePowerPeriod:
    def test_examples(self):
        assert prime_power_period(2, 3).gamma_pe == 12
        assert prime_power_period(5, 1).gamma_pe == 20
        assert prime_power_period(5, 2).gamma_pe == 100
        assert pisano_direct(25) == 100

    def test_two_powers_match_direct(self):
        for k in range(1, 21):
            assert prime_power_period(2, k).gamma_pe == pisano_direct(2**k)

    def test_odd_powers_match_direct(self):
        for p, e in [(3, 2), (3, 3), (3, 4), (5, 2), (7, 2), (11, 2), (13, 2), (47, 2)]:
            assert prime_power_period(p, e).gamma_pe == pisano_direct(p**e)

    def test_structure(self):
        for p in sieve_upto(200):
            for e in (1, 2, 3):
                record = prime_power_period(p, e)
                assert record.gamma_pe % record.gamma_p == 0
                if p != 2:
                    assert record.gamma_p % 2 == 0

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            prime_power_period(4, 2)
        with pytest.raises(ValueError):
            prime_power_period(3, 0)


class TestPisanoFast:
    @pytest.mark.parametrize("m,period", [(10, 60), (6, 24), (12, 24), (36, 24)])
    def test_examples(self, m, period):
        assert pisano_fast(m) == period

    def test_matches_direct(self):
        for m in range(2, 2000):
            assert pisano_fast(m) == pisano_direct(m), m

    def test_rejects_below_two(self):
        with pytest.raises(ValueError):
            pisano_fast(1)


class TestRankOfApparition:
    @pytest.mark.parametrize("m,rank", [(5, 5), (2, 3), (6, 12)])
    def test_examples(self, m, rank):
        assert rank_of_apparition(m) == rank

    def test_matches_scan(self):
        for m in range(2, 500):
            assert rank_of_apparition(m) == rank_scan(m), m

    def test_rank_neighbors_nonzero_at_primes(self):
        for p in sieve_upto(10_000):
            rank = rank_of_apparition(p)
            assert fib_pair_mod(rank - 1, p)[0] != 0
            assert fib_pair_mod(rank + 1, p)[0] != 0


class TestZeroCount:
    @pytest.mark.parametrize("m,count", [(5, 4), (2, 1), (8, 2)])
    def test_examples(self, m, count):
        assert zero_count(m) == count

    def test_matches_scan(self):
        for m in range(2, 500):
            direct = zero_count_direct(m)
            assert zero_count(m) == direct == zero_scan(m), m

    def test_two_power_counts(self):
        assert zero_count(2) == 1
        assert zero_count(4) == 1
        for e in range(3, 13):
            assert zero_count(2**e) == 2

    def test_odd_prime_powers_stable(self):
        for p in sieve_upto(100):
            if p == 2:
                continue
            base = zero_count(p)
            for e in (2, 3):
                if p**e <= 10**6:
                    assert zero_count(p**e) == base, (p, e)


class TestProfile:
    def test_one(self):
        prof = profile(1)
        assert (prof.gamma, prof.alpha, prof.upsilon) == (1, 1, 1)

    def test_examples(self):
        prof = profile(5)
        assert (prof.gamma, prof.alpha, prof.upsilon) == (20, 5, 4)
        prof = profile(2)
        assert (prof.gamma, prof.alpha, prof.upsilon) == (3, 3, 1)

    def test_invariants_over_range(self):
        for m in range(2, 1000):
            prof = profile(m)
            assert prof.gamma == prof.upsilon * prof.alpha
            assert prof.upsilon in (1, 2, 4)
            assert fib_pair_mod(prof.gamma, m) == (0, 1 % m)
            assert fib_pair_mod(prof.alpha, m)[0] == 0

    def test_odd_prime_periods_even(self):
        for p in sieve_upto(10_000):
            if p != 2:
                assert prime_period(p) % 2 == 0
