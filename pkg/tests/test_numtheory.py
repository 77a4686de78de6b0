"""Sieve, factorization, totient, and primorial against naive oracles."""
from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from sptorsion.numtheory import (
    Factorization,
    PrimeTable,
    factor,
    is_prime,
    primorial,
    sieve,
    totient,
    totient_prime_power,
)


def naive_primes(limit: int) -> list[int]:
    out = []
    for n in range(2, limit + 1):
        if all(n % d for d in range(2, math.isqrt(n) + 1)):
            out.append(n)
    return out


@pytest.mark.parametrize("limit", [2, 3, 10, 97, 100, 1000])
def test_sieve_matches_naive(limit):
    assert list(sieve(limit).primes) == naive_primes(limit)


def test_sieve_rejects_tiny_limit():
    with pytest.raises(ValueError):
        sieve(1)


def test_prime_table_count():
    assert sieve(23).count() == 9
    assert sieve(22).count() == 8
    assert sieve(2).count() == 1
    assert sieve(1000).count() == 168


@given(st.integers(min_value=1, max_value=10**6))
def test_factor_round_trip(m):
    fact = factor(m)
    assert fact.value() == m
    for p, a in fact:
        assert a >= 1
        assert is_prime(p)
    primes = fact.primes()
    assert list(primes) == sorted(set(primes))


def test_factor_large_smooth_input():
    # must not size its sieve from the square root of the full input
    m = primorial(62)
    fact = factor(m)
    assert fact.value() == m
    assert fact.primes()[-1] == 61


def test_factor_rejects_nonpositive():
    for bad in (0, -5):
        with pytest.raises(ValueError):
            factor(bad)


@given(st.integers(min_value=0, max_value=10**4))
def test_is_prime_matches_naive(n):
    naive = n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))
    assert is_prime(n) == naive


def test_totient_prime_power_values():
    assert totient_prime_power(2, 1) == 1
    assert totient_prime_power(2, 3) == 4
    assert totient_prime_power(3, 2) == 6
    assert totient_prime_power(5, 1) == 4
    with pytest.raises(ValueError):
        totient_prime_power(4, 1)
    with pytest.raises(ValueError):
        totient_prime_power(3, 0)


@pytest.mark.parametrize("n", range(1, 200))
def test_totient_matches_gcd_count(n):
    assert totient(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@given(
    st.integers(min_value=1, max_value=500),
    st.integers(min_value=1, max_value=500),
)
def test_totient_multiplicative_on_coprimes(a, b):
    if math.gcd(a, b) == 1:
        assert totient(a * b) == totient(a) * totient(b)


def test_primorial_values():
    assert primorial(2) == 2
    assert primorial(3) == 6
    assert primorial(10) == 210
    assert primorial(23) == 223092870
    assert primorial(24) == 223092870
    with pytest.raises(ValueError):
        primorial(1)


def test_factorization_container():
    fact = Factorization(((2, 2), (3, 1)))
    assert fact.value() == 12
    assert fact.primes() == (2, 3)
    assert len(fact) == 2
    assert list(fact) == [(2, 2), (3, 1)]
