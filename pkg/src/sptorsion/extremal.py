"""Exact f(g) = |S(g)| and h(g) = max S(g) by budgeted dynamic programming.

Both DPs walk the primes p <= 2g+1 once, treating each prime as a group of
mutually exclusive exponent choices priced by the additive cost of
`criterion` (for p = 2 the exponents 0 and 1 are both free; everything
else costs its totient).

  * count_orders convolves per-prime choice counts over the budget axis
    0..2g and subtracts 1 for the empty (m = 1) vector.
  * max_order runs a group knapsack over the odd primes, storing in each
    budget cell the exact best product as a Python integer, then grafts
    the 2-part on afterwards: the free factor 2 on the odd optimum versus
    2^a at cost 2^(a-1) for a >= 2. Distinct exponent vectors give
    distinct integers, so cells never tie; equal values across budgets
    resolve to the smaller budget because cells mean "best at cost <= b".

Exact integers in every cell keep the results platform-independent; there
is no floating comparison anywhere. brute_force_extremal re-derives both
values from the full enumeration and exists purely as an oracle.

Each per-genus computation is pure; extremal_table can evaluate distinct
genera in parallel worker processes and merges results by genus.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass

from .criterion import GenusCapError, _require_genus, enumerate_orders
from .numtheory import Factorization, sieve

__all__ = [
    "ExtremalRecord",
    "DEFAULT_GENUS_CAP",
    "DEFAULT_ORACLE_CAP",
    "count_orders",
    "max_order",
    "max_order_value",
    "brute_force_extremal",
    "extremal_table",
]

# Above this genus the exact DP wants an explicit opt-in: big-integer cells
# make memory grow roughly quadratically in g.
DEFAULT_GENUS_CAP = 5000

# brute_force_extremal materializes all of S(g); keep it an oracle.
DEFAULT_ORACLE_CAP = 30


@dataclass(frozen=True)
class ExtremalRecord:
    """(g, f(g), h(g)) with the factorization of h(g). Values are exact."""

    g: int
    f: int
    h: int
    h_factorization: Factorization


def _check_genus_cap(g: int, genus_cap: int | None) -> None:
    _require_genus(g)
    if genus_cap is not None and g > genus_cap:
        raise GenusCapError(
            f"genus {g} exceeds the exact-DP cap {genus_cap}; "
            "pass a larger cap (or none) to override"
        )


def count_orders(g: int, genus_cap: int | None = DEFAULT_GENUS_CAP) -> int:
    """|S(g)|, exactly."""
    _check_genus_cap(g, genus_cap)
    budget = 2 * g
    # counts[b] = number of exponent vectors of total cost exactly b
    counts = [0] * (budget + 1)
    counts[0] = 1
    for p in sieve(2 * g + 1).primes:
        if p == 2:
            options = [(0, 2)]  # exponents 0 and 1 both cost nothing
            cost = 2
            while cost <= budget:
                options.append((cost, 1))
                cost *= 2
        else:
            options = [(0, 1)]
            cost = p - 1
            while cost <= budget:
                options.append((cost, 1))
                cost *= p
        new = [0] * (budget + 1)
        for b in range(budget + 1):
            acc = 0
            for cost, mult in options:
                if cost > b:
                    break
                acc += counts[b - cost] * mult
            new[b] = acc
        counts = new
    return sum(counts) - 1  # drop the all-zero vector (m = 1)


def _best_odd_products(g: int) -> list[int]:
    """best[b] = largest product of odd prime powers of total cost <= b."""
    budget = 2 * g
    best = [1] * (budget + 1)
    for p in sieve(2 * g + 1).primes:
        if p == 2:
            continue
        options = []
        cost, value = p - 1, p
        while cost <= budget:
            options.append((cost, value))
            cost *= p
            value *= p
        new = best[:]  # exponent 0
        for b in range(options[0][0], budget + 1):
            cur = new[b]
            for cost, value in options:
                if cost > b:
                    break
                cand = best[b - cost] * value
                if cand > cur:
                    cur = cand
            new[b] = cur
        best = new
    return best


def max_order_value(g: int, genus_cap: int | None = DEFAULT_GENUS_CAP) -> int:
    """h(g) alone, skipping the count; large-genus sweeps use this."""
    _check_genus_cap(g, genus_cap)
    budget = 2 * g
    best = _best_odd_products(g)
    # 2-part post-processing: the free single factor 2 on the odd optimum,
    # against 2^a at cost 2^(a-1) for a >= 2.
    h = 2 * best[budget]
    cost, value = 2, 4
    while cost <= budget:
        cand = value * best[budget - cost]
        if cand > h:
            h = cand
        cost *= 2
        value *= 2
    return h


def max_order(g: int, genus_cap: int | None = DEFAULT_GENUS_CAP) -> ExtremalRecord:
    """The exact maximum h(g) of S(g), with |S(g)| and h's factorization."""
    h = max_order_value(g, genus_cap)
    h_fact = _factor_smooth(h, sieve(2 * g + 1).primes)
    return ExtremalRecord(g, count_orders(g, genus_cap), h, h_fact)


def _factor_smooth(m: int, primes: tuple[int, ...]) -> Factorization:
    """Factor an integer all of whose prime factors lie in `primes`."""
    entries = []
    rem = m
    for p in primes:
        if rem % p == 0:
            a = 0
            while rem % p == 0:
                rem //= p
                a += 1
            entries.append((p, a))
    if rem != 1:
        raise AssertionError(f"{m} is not smooth over the support primes")
    return Factorization(tuple(entries))


def brute_force_extremal(g: int, cap: int = DEFAULT_ORACLE_CAP) -> ExtremalRecord:
    """f and h from the full enumeration. Oracle for the DPs; g <= cap."""
    if g > cap:
        raise GenusCapError(
            f"brute-force oracle refuses genus {g} > cap {cap}; "
            "it exists to cross-check small cases"
        )
    orders = enumerate_orders(g, cap=cap)
    h = orders[-1]
    return ExtremalRecord(g, len(orders), h, _factor_smooth(h, sieve(2 * g + 1).primes))


def extremal_table(
    g_from: int,
    g_to: int,
    genus_cap: int | None = DEFAULT_GENUS_CAP,
    jobs: int = 1,
) -> list[ExtremalRecord]:
    """Records for every g in [g_from, g_to], each computed independently.

    jobs > 1 fans the genera out over worker processes; results are merged
    in genus order either way, so the table is deterministic.
    """
    if g_from < 1 or g_to < g_from:
        raise ValueError(f"invalid genus range {g_from}..{g_to}")
    genera = range(g_from, g_to + 1)
    if jobs <= 1 or len(genera) == 1:
        return [max_order(g, genus_cap) for g in genera]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_record_for, ((g, genus_cap) for g in genera)))


def _record_for(args: tuple[int, int | None]) -> ExtremalRecord:
    g, genus_cap = args
    return max_order(g, genus_cap)
