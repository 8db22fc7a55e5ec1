from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divrank import (
    Factorization,
    SieveMemoryError,
    build_spf_sieve,
    divisors_sorted,
    factorize,
    format_rational,
    is_prime,
    parse_rational,
    rational_of,
)
from conftest import ORACLE_LIMIT, oracle_divisors, oracle_factorize


class TestFactorize:
    def test_unit_is_empty(self):
        assert factorize(1) == Factorization(1, ())

    def test_twelve(self):
        assert factorize(12).factors == ((2, 2), (3, 1))

    def test_11025(self):
        assert factorize(11025).factors == ((3, 2), (5, 2), (7, 2))

    def test_rejects_zero_and_negative(self):
        with pytest.raises(ValueError):
            factorize(0)
        with pytest.raises(ValueError):
            factorize(-5)

    def test_against_oracle_small(self):
        for n in range(1, 2000):
            assert factorize(n).factors == oracle_factorize(n)

    @given(st.integers(min_value=1, max_value=10**9))
    @settings(max_examples=150, deadline=None)
    def test_invariants(self, n):
        f = factorize(n)
        product = 1
        for p, e in f.factors:
            assert e >= 1
            assert is_prime(p)
            product *= p**e
        assert product == n
        primes = [p for p, _ in f.factors]
        assert primes == sorted(set(primes))


class TestSpfSieve:
    def test_small_queries(self):
        sieve = build_spf_sieve(10)
        assert sieve.smallest_factor(9) == 3
        assert sieve.smallest_factor(7) == 7
        assert sieve.smallest_factor(10) == 2

    def test_out_of_range_query(self):
        sieve = build_spf_sieve(10)
        with pytest.raises(ValueError):
            sieve.smallest_factor(11)
        with pytest.raises(ValueError):
            sieve.smallest_factor(1)

    def test_agrees_with_trial_division_exhaustively(self, sieve_10k):
        for n in range(1, ORACLE_LIMIT + 1):
            assert sieve_10k.factorize(n) == factorize(n)

    def test_is_prime_table(self, sieve_10k):
        for n in range(2, 500):
            assert sieve_10k.is_prime(n) == is_prime(n)

    def test_memory_budget(self):
        with pytest.raises(SieveMemoryError):
            build_spf_sieve(10**9, memory_budget=10**6)

    def test_falls_back_above_limit(self):
        sieve = build_spf_sieve(100)
        assert sieve.factorize(101 * 103).factors == ((101, 1), (103, 1))


class TestDivisorsSorted:
    def test_unit(self):
        assert divisors_sorted(factorize(1)) == [1]

    def test_twelve(self):
        assert divisors_sorted(factorize(12)) == [1, 2, 3, 4, 6, 12]

    def test_36(self):
        assert divisors_sorted(factorize(36)) == [1, 2, 3, 4, 6, 9, 12, 18, 36]

    def test_against_oracle_exhaustively(self, oracle_div_lists):
        for n in range(1, ORACLE_LIMIT + 1):
            assert divisors_sorted(factorize(n)) == oracle_div_lists[n]

    @given(st.integers(min_value=1, max_value=10**6))
    @settings(max_examples=200, deadline=None)
    def test_complement_symmetry(self, n):
        divs = divisors_sorted(factorize(n))
        tau = len(divs)
        f = factorize(n)
        assert tau == f.tau
        for i in range(tau):
            assert divs[i] * divs[tau - 1 - i] == n

    @given(st.integers(min_value=1, max_value=5000))
    @settings(max_examples=80, deadline=None)
    def test_matches_oracle(self, n):
        assert divisors_sorted(factorize(n)) == oracle_divisors(n)


class TestRational:
    def test_reduces(self):
        assert rational_of(18, 10) == Fraction(9, 5)
        assert format_rational(rational_of(18, 10)) == "9/5"

    def test_zero(self):
        q = rational_of(0, 7)
        assert (q.numerator, q.denominator) == (0, 1)
        assert format_rational(q) == "0"

    def test_already_reduced(self):
        assert format_rational(rational_of(33, 58)) == "33/58"

    def test_integer_display_drops_denominator(self):
        assert format_rational(rational_of(4, 2)) == "2"

    def test_rejects_zero_denominator(self):
        with pytest.raises(ValueError):
            rational_of(1, 0)

    def test_rejects_negatives(self):
        with pytest.raises(ValueError):
            rational_of(-1, 2)
        with pytest.raises(ValueError):
            rational_of(1, -2)

    @pytest.mark.parametrize("text", ["abc", "1/0", "-3/4", "1.5", "3/", "/5", ""])
    def test_parse_rejects_junk(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_parse_examples(self):
        assert parse_rational("9/5") == Fraction(9, 5)
        assert parse_rational("2") == Fraction(2)
        assert parse_rational("18/10") == Fraction(9, 5)

    @given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=1, max_value=10**9))
    @settings(max_examples=200, deadline=None)
    def test_parse_render_round_trip(self, num, den):
        q = rational_of(num, den)
        assert parse_rational(format_rational(q)) == q
