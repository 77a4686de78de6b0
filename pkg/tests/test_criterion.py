"""Membership criterion: costs, exemption, enumeration, and invariants."""
from __future__ import annotations

import math

import pytest
from hypothesis import given, settings, strategies as st

from sptorsion.criterion import (
    DEFAULT_ENUMERATION_CAP,
    GenusCapError,
    degree_cost,
    enumerate_orders,
    is_member,
    membership,
    prime_power_cost,
    support_primes,
)
from sptorsion.numtheory import factor, totient_prime_power


def two_case_cost(m: int) -> int:
    # direct transcription of the cost definition: sum phi(p^a) over the
    # factorization, dropping the prime-2 term when m == 2 (mod 4)
    total = 0
    for p, a in factor(m):
        if p == 2 and m % 4 == 2:
            continue
        total += totient_prime_power(p, a)
    return total


def test_prime_power_cost_cases():
    assert prime_power_cost(2, 1) == 0
    assert prime_power_cost(2, 2) == 2
    assert prime_power_cost(2, 3) == 4
    assert prime_power_cost(2, 5) == 16
    assert prime_power_cost(3, 1) == 2
    assert prime_power_cost(3, 2) == 6
    assert prime_power_cost(7, 1) == 6


def test_degree_cost_examples():
    report = degree_cost(12)
    assert report.total == 4
    assert not report.exemption_applied
    report = degree_cost(10)
    assert report.total == 4
    assert report.exemption_applied
    report = degree_cost(2)
    assert report.total == 0
    assert report.exemption_applied


def test_degree_cost_additivity_against_definition():
    for m in range(2, 10**5 + 1):
        assert degree_cost(m).total == two_case_cost(m), m


def test_membership_small():
    decision = membership(6, 1)
    assert decision.member
    assert decision.budget == 2
    assert decision.deficit == 0
    decision = membership(5, 1)
    assert not decision.member
    assert decision.deficit == 2


def test_identity_order_rejected():
    with pytest.raises(ValueError, match="identity"):
        membership(1, 3)
    with pytest.raises(ValueError):
        degree_cost(1)


def test_bad_arguments_rejected():
    with pytest.raises(ValueError):
        membership(0, 1)
    with pytest.raises(ValueError):
        membership(6, 0)


def test_enumerate_small_genera():
    assert enumerate_orders(1) == [2, 3, 4, 6]
    assert enumerate_orders(2) == [2, 3, 4, 5, 6, 8, 10, 12]
    assert enumerate_orders(3) == [
        2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30,
    ]


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_enumerate_matches_brute_scan(g):
    # every order is bounded by 3 e^{3g}, so a full scan is an exact oracle
    ceiling = math.ceil(3 * math.exp(3 * g))
    scanned = [m for m in range(2, ceiling + 1) if is_member(m, g)]
    assert enumerate_orders(g) == scanned


@pytest.mark.parametrize("g", [1, 2, 3, 5, 8])
def test_enumerate_is_sorted_and_member(g):
    orders = enumerate_orders(g)
    assert orders == sorted(set(orders))
    assert all(is_member(m, g) for m in orders)


def test_enumeration_cap():
    with pytest.raises(GenusCapError):
        enumerate_orders(DEFAULT_ENUMERATION_CAP + 1)
    enumerate_orders(5, cap=5)
    with pytest.raises(GenusCapError):
        enumerate_orders(6, cap=5)


@given(
    st.integers(min_value=1, max_value=10**4).filter(lambda m: m % 2 == 1),
    st.integers(min_value=1, max_value=30),
)
def test_free_doubling(m, g):
    # doubling an odd order is free: 2m == 2 (mod 4) waives the new term
    if m == 1:
        return
    assert degree_cost(2 * m).total == degree_cost(m).total
    if is_member(m, g):
        assert is_member(2 * m, g)


@settings(deadline=None)
@given(st.integers(min_value=1, max_value=20))
def test_support_bound(g):
    for m in enumerate_orders(g):
        fact = factor(m)
        assert all(p <= 2 * g + 1 for p in fact.primes())
        assert len(fact) <= g + 1


def test_membership_monotone_in_genus():
    for g in range(1, 12):
        smaller = set(enumerate_orders(g))
        larger = set(enumerate_orders(g + 1))
        assert smaller <= larger


def test_support_primes():
    assert support_primes(1) == (2, 3)
    assert support_primes(3) == (2, 3, 5, 7)
    assert support_primes(5) == (2, 3, 5, 7, 11)
