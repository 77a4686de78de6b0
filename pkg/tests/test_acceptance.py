"""Acceptance gate: one test per stated criterion, runtime caps enforced.

Each test prints a single PASS/FAIL line (visible under pytest -s or in
captured output on failure) and asserts both the mathematical content and
the runtime budget.
"""
from __future__ import annotations

import contextlib
import json
import subprocess
import sys
import time

from sptorsion.bounds import compute_K, compute_L, run_check
from sptorsion.criterion import degree_cost, enumerate_orders, is_member
from sptorsion.extremal import brute_force_extremal, extremal_table, max_order
from sptorsion.matrices import standard_form
from sptorsion.numtheory import factor
from sptorsion.witness import build_witness


@contextlib.contextmanager
def criterion(name: str, budget_s: float):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {name}: FAIL ({time.monotonic() - start:.1f}s)")
        raise
    elapsed = time.monotonic() - start
    verdict = "PASS" if elapsed < budget_s else "FAIL (over time budget)"
    print(f"ACCEPTANCE {name}: {verdict} ({elapsed:.1f}s / budget {budget_s:.0f}s)")
    assert elapsed < budget_s, f"{name} exceeded {budget_s}s: {elapsed:.1f}s"


def sweep_passes(name: str, lo: int, hi: int) -> int:
    rows = 0
    for report in run_check(name, lo, hi):
        assert report.passed is not False, (name, report)
        rows += 1
    return rows


def test_oracle_equivalence_g1_12():
    with criterion("oracle-equivalence g=1..12", 10):
        for g in range(1, 13):
            record = max_order(g)
            reference = brute_force_extremal(g)
            assert (record.f, record.h) == (reference.f, reference.h), g


def test_known_small_structure():
    with criterion("known small structure", 10):
        assert enumerate_orders(1) == [2, 3, 4, 6]
        assert brute_force_extremal(1).h == 6
        assert brute_force_extremal(2).h == 12
        assert brute_force_extremal(3).h == 30
        assert max_order(1).h == 6
        assert max_order(2).h == 12
        assert max_order(3).h == 30


def test_witness_soundness_sweep_g1_6():
    with criterion("witness soundness g=1..6", 60):
        for g in range(1, 7):
            j = standard_form(g)
            for m in enumerate_orders(g):
                witness = build_witness(m, g)
                a = witness.matrix
                assert a.rows == a.cols == 2 * g
                assert a.transpose() @ j @ a == j
                assert (a**m).is_identity()
                for p, _ in factor(m):
                    assert not (a ** (m // p)).is_identity()


def test_absolute_upper_bound_g1_300():
    with criterion("h <= 3e^{3g} and f <= h, g=1..300", 300):
        assert sweep_passes("thm31", 1, 300) == 300
        assert sweep_passes("cor32", 1, 300) == 300


def test_refined_upper_bound_g1486_1500():
    with criterion("refined upper bound g=1486..1500", 600):
        assert sweep_passes("remark-upper", 1486, 1500) == 15


def test_exponential_lower_bound_above_L():
    level = compute_L()
    assert level == 489
    with criterion("lower bounds on f and h, g in [L, L+100]", 300):
        assert sweep_passes("thm36", level, level + 100) == 101
        assert sweep_passes("cor37", level, level + 100) == 101


def test_prime_estimate_sweeps_combined():
    with criterion("prime estimate sweeps", 300):
        assert sweep_passes("lemma33", 23, 10**5) == 10**5 - 23 + 1
        assert sweep_passes("dusart-sum", 9, 10**4) == 10**4 - 9 + 1
        assert sweep_passes("rosser", 55, 10**5) == 10**5 - 55 + 1
        # both directions at every integer point, one row each
        assert sweep_passes("dusart-pi", 2, 10**5) == 2 * (10**5 - 1)
        assert sweep_passes("dusart-product", 2973, 10**5) == 10**5 - 2973 + 1


def test_primorial_membership_above_K():
    level = compute_K()
    assert level == 113
    with criterion("primorial membership, g in [K, K+500]", 300):
        assert sweep_passes("lemma35", level, level + 500) == 2 * 501


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "sptorsion.cli", *args],
        capture_output=True,
        text=True,
        timeout=300,
    )


def test_determinism_byte_identical_json(tmp_path):
    with criterion("byte-identical repeated JSON", 120):
        witness_path = tmp_path / "w.json"
        run_cli("witness", "12", "-g", "3", "-o", str(witness_path))
        commands = [
            ("member", "6", "-g", "1", "--format", "json"),
            ("orders", "-g", "4", "--format", "json"),
            ("extremal", "-g", "1..8", "--format", "json"),
            ("witness", "12", "-g", "3", "--format", "json"),
            ("verify", str(witness_path), "--format", "json"),
            ("bounds", "--check", "lemma34", "--range", "113..120", "--format", "json"),
        ]
        for args in commands:
            first = run_cli(*args)
            second = run_cli(*args)
            assert first.returncode == second.returncode == 0, args
            assert first.stdout == second.stdout, args
            json.loads(first.stdout)  # payload is well-formed JSON


def test_invariant_suite():
    with criterion("invariant suite", 300):
        # cost additivity against the two-case definition, m <= 1e5
        from sptorsion.numtheory import totient_prime_power

        for m in range(2, 10**5 + 1):
            expected = sum(
                totient_prime_power(p, a)
                for p, a in factor(m)
                if not (p == 2 and m % 4 == 2)
            )
            assert degree_cost(m).total == expected, m

        # free-doubling of odd members
        for g in range(1, 21):
            for m in enumerate_orders(g):
                if m % 2 == 1:
                    assert is_member(2 * m, g)
                    assert degree_cost(2 * m).total == degree_cost(m).total

        # monotonicity and evenness over a computed table
        table = extremal_table(1, 200)
        for earlier, later in zip(table, table[1:]):
            assert earlier.f <= later.f
            assert earlier.h <= later.h
        assert all(record.h % 2 == 0 for record in table)

        # support bound: primes <= 2g+1 and at most g+1 of them, g <= 20
        for g in range(1, 21):
            for m in enumerate_orders(g):
                fact = factor(m)
                assert all(p <= 2 * g + 1 for p in fact.primes())
                assert len(fact) <= g + 1
