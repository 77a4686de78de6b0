"""Desk-scale certification of the growth and prime-distribution bounds.

Every checker yields BoundReport rows with an exact left side (integer
or exact rational, never rounded) and a guarded real right side. Real
right sides are evaluated with 50-digit working precision, converted to
an exact dyadic rational, then tilted adversarially by a relative guard
of 1e-9 before the comparison: an upper bound must clear rhs*(1-1e-9),
a lower bound rhs*(1+1e-9). A reported pass therefore certifies the
inequality with slack that dwarfs both the evaluation error (~1e-49)
and the decimal-constant error, and a run is reproducible bit for bit.

Rows whose point sits below an inequality's stated validity threshold
get passed=None ("precondition unmet") rather than a failure; the
thresholds K, L, and the improved-lower-bound cutoff are computed by
scanning, never hard-coded:

  K = least integer >= 3 with K*log(K) >= 529    (= 23^2)
  L = least integer >= 2 with L*log(L) >= 3025   (= 55^2)
  improved cutoff = least g with g*log(g) >= 358801  (= 599^2)

The comparisons all reduce to exact rational arithmetic; no float ever
decides a verdict. The one display-only compromise: the Mertens-type
product check keeps the running product as a raw numerator/denominator
pair (tens of thousands of digits at the top of the sweep), decides by
exact cross-multiplication, and renders the left side at float
precision because printing the exact rational would be useless.

margin is rhs - lhs on the raw (unguarded) right side, so for upper
bounds pass tracks margin >= 0 and for lower bounds margin <= 0.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from mpmath import mp, mpf

from .criterion import membership
from .extremal import (
    DEFAULT_GENUS_CAP,
    _check_genus_cap,
    count_orders,
    max_order,
    max_order_value,
)
from .numtheory import primorial, sieve

__all__ = [
    "BoundReport",
    "GUARD",
    "EULER_GAMMA_20",
    "compute_K",
    "compute_L",
    "improved_lower_threshold",
    "check_thm31",
    "check_cor32",
    "check_remark_upper",
    "check_thm36",
    "check_cor37",
    "check_remark_lower",
    "check_lemma33",
    "check_lemma34",
    "check_lemma35",
    "check_dusart_sum",
    "check_dusart_pi",
    "check_dusart_product",
    "check_rosser",
    "check_upper_bounds",
    "check_lower_bounds",
    "check_lemmas",
    "check_prime_estimates",
    "CHECK_NAMES",
    "GENUS_CHECKS",
    "run_check",
    "default_range",
    "render_value",
    "report_to_dict",
    "REPORT_FIELDS",
]

# Relative guard applied to every real right-hand side.
GUARD = Fraction(1, 10**9)

# Euler-Mascheroni constant, correctly rounded to 20 decimal digits.
EULER_GAMMA_20 = "0.57721566490153286061"

_DPS = 50  # working precision for right-hand sides


@dataclass(frozen=True)
class BoundReport:
    """One inequality instance: exact lhs vs guarded rhs at one point.

    passed is None when the point is below the inequality's validity
    threshold. margin = rhs - lhs on the unguarded right side.
    """

    name: str
    point: int
    lhs: int | Fraction
    rhs: int | Fraction
    margin: int | Fraction
    passed: bool | None
    note: str = ""


def _mpf_to_fraction(x: mpf) -> Fraction:
    sign, man, exp, _ = x._mpf_
    if man == 0:
        if x == 0:
            return Fraction(0)
        raise ValueError(f"cannot convert nonfinite value {x!r}")
    value = Fraction(-man if sign else man)
    return value * Fraction(2) ** exp


def _guarded_pass(lhs: int | Fraction, rhs: Fraction, op: str) -> bool:
    """Exact comparison against the adversarially tilted right side."""
    if rhs <= 0:
        raise AssertionError("right sides here are positive by construction")
    if op == "<=":
        return lhs <= rhs * (1 - GUARD)
    if op == "<":
        return lhs < rhs * (1 - GUARD)
    if op == ">":
        return lhs > rhs * (1 + GUARD)
    if op == ">=":
        return lhs >= rhs * (1 + GUARD)
    raise ValueError(f"unknown comparison {op!r}")


def _exact_pass(lhs: int | Fraction, rhs: int | Fraction, op: str) -> bool:
    if op == "<=":
        return lhs <= rhs
    if op == "<":
        return lhs < rhs
    if op == ">":
        return lhs > rhs
    if op == ">=":
        return lhs >= rhs
    raise ValueError(f"unknown comparison {op!r}")


def _real_row(
    name: str, point: int, lhs: int | Fraction, rhs: mpf, op: str, note: str = ""
) -> BoundReport:
    rhs_frac = _mpf_to_fraction(rhs)
    return BoundReport(
        name, point, lhs, rhs_frac, rhs_frac - lhs, _guarded_pass(lhs, rhs_frac, op), note
    )


def _exact_row(
    name: str, point: int, lhs: int | Fraction, rhs: int | Fraction, op: str, note: str = ""
) -> BoundReport:
    return BoundReport(name, point, lhs, rhs, rhs - lhs, _exact_pass(lhs, rhs, op), note)


def _unmet_row(name: str, point: int, threshold_desc: str) -> BoundReport:
    return BoundReport(
        name, point, 0, 0, 0, None, f"precondition unmet: requires {threshold_desc}"
    )


# ---------------------------------------------------------------------------
# computed thresholds


@lru_cache(maxsize=None)
def compute_K() -> int:
    """Least integer >= 3 with sqrt(K log K) >= 23, by upward scan."""
    with mp.workdps(_DPS):
        k = 3
        while mpf(k) * mp.log(k) < 529:
            k += 1
        return k


@lru_cache(maxsize=None)
def compute_L() -> int:
    """Least integer >= 2 with sqrt(L log L) >= 55, by upward scan."""
    with mp.workdps(_DPS):
        n = 2
        while mpf(n) * mp.log(n) < 3025:
            n += 1
        return n


@lru_cache(maxsize=None)
def improved_lower_threshold() -> int:
    """Least integer g with g log g >= 599^2, by doubling plus bisection."""
    target = 599**2
    with mp.workdps(_DPS):

        def holds(n: int) -> bool:
            return mpf(n) * mp.log(n) >= target

        hi = 4
        while not holds(hi):
            hi *= 2
        lo = hi // 2
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if holds(mid):
                hi = mid
            else:
                lo = mid
        return hi


# ---------------------------------------------------------------------------
# prime lookups over a sweep


class _PrimeView:
    """Sieve-backed pi(x), sum of primes <= x, and n-th prime queries."""

    def __init__(self, limit: int):
        self.primes = sieve(max(limit, 2)).primes
        self._cum = tuple(itertools.accumulate(self.primes))

    def pi(self, x: int | float) -> int:
        return bisect_right(self.primes, x)

    def sum_upto(self, x: int | float) -> int:
        n = self.pi(x)
        return self._cum[n - 1] if n else 0

    def nth(self, n: int) -> int:
        return self.primes[n - 1]

    def sum_first(self, n: int) -> int:
        return self._cum[n - 1]


def _range_check(lo: int, hi: int, what: str, minimum: int = 1) -> None:
    if lo < minimum or hi < lo:
        raise ValueError(f"invalid {what} range {lo}..{hi}")


# ---------------------------------------------------------------------------
# growth bounds (upper)


def check_thm31(
    g_from: int, g_to: int, genus_cap: int | None = DEFAULT_GENUS_CAP
) -> Iterator[BoundReport]:
    """h(g) <= 3 e^{3g}, exact h from the DP."""
    _range_check(g_from, g_to, "genus")
    _check_genus_cap(g_to, genus_cap)
    for g in range(g_from, g_to + 1):
        h = max_order_value(g, genus_cap)
        with mp.workdps(_DPS):
            rhs = 3 * mp.e ** (3 * g)
        yield _real_row("thm31", g, h, rhs, "<=")


def check_cor32(
    g_from: int, g_to: int, genus_cap: int | None = DEFAULT_GENUS_CAP
) -> Iterator[BoundReport]:
    """f(g) <= h(g), both exact."""
    _range_check(g_from, g_to, "genus")
    _check_genus_cap(g_to, genus_cap)
    for g in range(g_from, g_to + 1):
        record = max_order(g, genus_cap)
        yield _exact_row("cor32", g, record.f, record.h, "<=")


def _remark_upper_rhs(g: int) -> mpf:
    gamma = mpf(EULER_GAMMA_20)
    return 2 * mp.e**gamma * mp.log(2 * g + 1) * mp.e ** (mpf(2 * g + 1) / mp.e)


REMARK_UPPER_START = 1486  # stated validity threshold of the refined bound


def check_remark_upper(
    g_from: int, g_to: int, genus_cap: int | None = DEFAULT_GENUS_CAP
) -> Iterator[BoundReport]:
    """h(g) <= 2 e^gamma log(2g+1) e^{(2g+1)/e} for g >= 1486."""
    _range_check(g_from, g_to, "genus")
    _check_genus_cap(g_to, genus_cap)
    for g in range(g_from, g_to + 1):
        if g < REMARK_UPPER_START:
            yield _unmet_row("remark-upper", g, f"g >= {REMARK_UPPER_START}")
            continue
        h = max_order_value(g, genus_cap)
        with mp.workdps(_DPS):
            rhs = _remark_upper_rhs(g)
        yield _real_row("remark-upper", g, h, rhs, "<=")


# ---------------------------------------------------------------------------
# growth bounds (lower)


def _quarter_sqrt_bound(g: int) -> mpf:
    return mp.e ** (mp.sqrt(mpf(g) / mp.log(g)) / 4)


def _improved_bound(g: int) -> mpf:
    return mp.e ** mp.sqrt(mpf(g) / (4 * mp.log(g)))


def check_thm36(
    g_from: int, g_to: int, genus_cap: int | None = DEFAULT_GENUS_CAP
) -> Iterator[BoundReport]:
    """f(g) > e^{(1/4) sqrt(g/log g)} for g >= L."""
    _range_check(g_from, g_to, "genus")
    _check_genus_cap(g_to, genus_cap)
    level = compute_L()
    for g in range(g_from, g_to + 1):
        if g < level:
            yield _unmet_row("thm36", g, f"g >= L = {level}")
            continue
        f = count_orders(g, genus_cap)
        with mp.workdps(_DPS):
            rhs = _quarter_sqrt_bound(g)
        yield _real_row("thm36", g, f, rhs, ">")


def check_cor37(
    g_from: int, g_to: int, genus_cap: int | None = DEFAULT_GENUS_CAP
) -> Iterator[BoundReport]:
    """h(g) > e^{(1/4) sqrt(g/log g)} for g >= L."""
    _range_check(g_from, g_to, "genus")
    _check_genus_cap(g_to, genus_cap)
    level = compute_L()
    for g in range(g_from, g_to + 1):
        if g < level:
            yield _unmet_row("cor37", g, f"g >= L = {level}")
            continue
        h = max_order_value(g, genus_cap)
        with mp.workdps(_DPS):
            rhs = _quarter_sqrt_bound(g)
        yield _real_row("cor37", g, h, rhs, ">")


def check_remark_lower(
    g_from: int, g_to: int, genus_cap: int | None = DEFAULT_GENUS_CAP
) -> Iterator[BoundReport]:
    """f(g) and h(g) > e^{sqrt(g/(4 log g))} once g log g >= 599^2."""
    _range_check(g_from, g_to, "genus")
    _check_genus_cap(g_to, genus_cap)
    cutoff = improved_lower_threshold()
    for g in range(g_from, g_to + 1):
        if g < cutoff:
            yield _unmet_row("remark-lower-f", g, f"g log g >= 599^2 (g >= {cutoff})")
            yield _unmet_row("remark-lower-h", g, f"g log g >= 599^2 (g >= {cutoff})")
            continue
        record = max_order(g, genus_cap)
        with mp.workdps(_DPS):
            rhs = _improved_bound(g)
        yield _real_row("remark-lower-f", g, record.f, rhs, ">")
        yield _real_row("remark-lower-h", g, record.h, rhs, ">")


# ---------------------------------------------------------------------------
# lemmas


def check_lemma33(x_from: int, x_to: int) -> Iterator[BoundReport]:
    """Sum of primes <= x is < x pi(x) / 2 for x >= 23; exact halves."""
    _range_check(x_from, x_to, "x")
    view = _PrimeView(x_to)
    for x in range(x_from, x_to + 1):
        if x < 23:
            yield _unmet_row("lemma33", x, "x >= 23")
            continue
        yield _exact_row(
            "lemma33", x, view.sum_upto(x), Fraction(x * view.pi(x), 2), "<"
        )


def check_lemma34(g_from: int, g_to: int) -> Iterator[BoundReport]:
    """pi(sqrt(g log g)) < 3 sqrt(g log g) / log(g log g) for g >= K.

    The chain behind it uses pi(y) < (y/log y)(1 + c/log y); both the
    c = 3/2 step quoted in the argument and the sharper c = 1.2762
    estimate it leans on are recorded as separate rows.
    """
    _range_check(g_from, g_to, "genus")
    level = compute_K()
    with mp.workdps(_DPS):
        y_max = mp.sqrt(mpf(g_to) * mp.log(g_to)) if g_to >= 2 else mpf(2)
    view = _PrimeView(int(y_max) + 2)
    for g in range(g_from, g_to + 1):
        if g < level:
            yield _unmet_row("lemma34", g, f"g >= K = {level}")
            continue
        with mp.workdps(_DPS):
            glg = mpf(g) * mp.log(g)
            y = mp.sqrt(glg)
            lhs = view.pi(int(mp.floor(y)))
            main_rhs = 3 * y / mp.log(glg)
            log_y = mp.log(y)
            rhs_15 = (y / log_y) * (1 + mpf(3) / (2 * log_y))
            rhs_dusart = (y / log_y) * (1 + mpf("1.2762") / log_y)
        yield _real_row("lemma34", g, lhs, main_rhs, "<")
        yield _real_row("lemma34-step-1.5", g, lhs, rhs_15, "<")
        yield _real_row("lemma34-step-1.2762", g, lhs, rhs_dusart, "<=")


def check_lemma35(g_from: int, g_to: int) -> Iterator[BoundReport]:
    """The primorial of primes <= sqrt(g log g) is a member of S(g).

    Two rows per genus: the membership budget test itself (cost vs 2g)
    and the intermediate bound beta < (3/2) g on the odd-prime cost.
    """
    _range_check(g_from, g_to, "genus")
    level = compute_K()
    for g in range(g_from, g_to + 1):
        if g < level:
            yield _unmet_row("lemma35", g, f"g >= K = {level}")
            continue
        with mp.workdps(_DPS):
            x = int(mp.floor(mp.sqrt(mpf(g) * mp.log(g))))
        decision = membership(primorial(x), g)
        report = decision.report
        beta = sum(t.cost for t in report.terms if t.prime != 2)
        yield BoundReport(
            "lemma35",
            g,
            report.total,
            decision.budget,
            decision.budget - report.total,
            decision.member,
        )
        yield _exact_row("lemma35-beta", g, beta, Fraction(3 * g, 2), "<")


# ---------------------------------------------------------------------------
# prime estimates


def check_dusart_sum(n_from: int, n_to: int) -> Iterator[BoundReport]:
    """Sum of the first n primes < n p_n / 2 for n >= 9; exact halves."""
    _range_check(n_from, n_to, "n")
    # p_n < n (log n + log log n) for n >= 6 sizes the sieve
    limit = max(100, int(n_to * (mp.log(n_to) + mp.log(mp.log(n_to)))) + 10) if n_to >= 6 else 100
    view = _PrimeView(limit)
    if len(view.primes) < n_to:
        raise AssertionError(f"sieve limit {limit} too small for n = {n_to}")
    for n in range(n_from, n_to + 1):
        if n < 9:
            yield _unmet_row("dusart-sum", n, "n >= 9")
            continue
        yield _exact_row(
            "dusart-sum", n, view.sum_first(n), Fraction(n * view.nth(n), 2), "<"
        )


def check_dusart_pi(x_from: int, x_to: int) -> Iterator[BoundReport]:
    """pi(x) <= (x/log x)(1 + 1.2762/log x) for x >= 2,
    and pi(x) >= (x/log x)(1 + 1/log x) for x >= 599."""
    _range_check(x_from, x_to, "x")
    view = _PrimeView(x_to)
    with mp.workdps(_DPS):
        dusart_const = mpf("1.2762")
    for x in range(x_from, x_to + 1):
        lhs = view.pi(x)
        if x < 2:
            yield _unmet_row("dusart-pi-upper", x, "x >= 2")
        else:
            with mp.workdps(_DPS):
                log_x = mp.log(x)
                upper = (x / log_x) * (1 + dusart_const / log_x)
            yield _real_row("dusart-pi-upper", x, lhs, upper, "<=")
        if x < 599:
            yield _unmet_row("dusart-pi-lower", x, "x >= 599")
        else:
            with mp.workdps(_DPS):
                log_x = mp.log(x)
                lower = (x / log_x) * (1 + 1 / log_x)
            yield _real_row("dusart-pi-lower", x, lhs, lower, ">=")


def check_dusart_product(x_from: int, x_to: int) -> Iterator[BoundReport]:
    """prod_{p <= x} (1 - 1/p) > (e^-gamma / log x)(1 - 0.2/log^2 x)
    for x >= 2973; the product side is an exact rational.

    The verdict cross-multiplies the raw numerator/denominator pair
    against the guarded dyadic right side, so it is exact; only the
    displayed lhs and margin are float approximations of the exact
    rational (noted on each row).
    """
    _range_check(x_from, x_to, "x")
    view = _PrimeView(x_to)
    num, den = 1, 1
    prod_float = 1.0
    next_prime_idx = 0
    primes = view.primes
    with mp.workdps(_DPS):
        exp_neg_gamma = mp.e ** -mpf(EULER_GAMMA_20)
        fifth = mpf("0.2")
    note = "lhs and margin displayed at float precision; verdict exact"
    for x in range(x_from, x_to + 1):
        while next_prime_idx < len(primes) and primes[next_prime_idx] <= x:
            p = primes[next_prime_idx]
            num *= p - 1
            den *= p
            prod_float *= 1 - 1 / p
            next_prime_idx += 1
        if x < 2973:
            yield _unmet_row("dusart-product", x, "x >= 2973")
            continue
        with mp.workdps(_DPS):
            log_x = mp.log(x)
            rhs = (exp_neg_gamma / log_x) * (1 - fifth / log_x**2)
        rhs_frac = _mpf_to_fraction(rhs)
        guarded = rhs_frac * (1 + GUARD)
        # exact: num/den > guarded  <=>  num * g.den > g.num * den
        passed = num * guarded.denominator > guarded.numerator * den
        lhs_display = Fraction(prod_float)
        yield BoundReport(
            "dusart-product",
            x,
            lhs_display,
            rhs_frac,
            rhs_frac - lhs_display,
            passed,
            note,
        )


def check_rosser(x_from: int, x_to: int) -> Iterator[BoundReport]:
    """pi(x) > x / (log x + 2) for x >= 55."""
    _range_check(x_from, x_to, "x")
    view = _PrimeView(x_to)
    for x in range(x_from, x_to + 1):
        if x < 55:
            yield _unmet_row("rosser", x, "x >= 55")
            continue
        with mp.workdps(_DPS):
            rhs = mpf(x) / (mp.log(x) + 2)
        yield _real_row("rosser", x, view.pi(x), rhs, ">")


# ---------------------------------------------------------------------------
# aggregate sweeps


def check_upper_bounds(
    g_from: int, g_to: int, genus_cap: int | None = DEFAULT_GENUS_CAP
) -> Iterator[BoundReport]:
    """Per genus: the absolute bound, f <= h, and (when applicable) the
    refined logarithmic bound."""
    _range_check(g_from, g_to, "genus")
    _check_genus_cap(g_to, genus_cap)
    for g in range(g_from, g_to + 1):
        record = max_order(g, genus_cap)
        with mp.workdps(_DPS):
            rhs = 3 * mp.e ** (3 * g)
        yield _real_row("thm31", g, record.h, rhs, "<=")
        yield _exact_row("cor32", g, record.f, record.h, "<=")
        if g >= REMARK_UPPER_START:
            with mp.workdps(_DPS):
                rhs = _remark_upper_rhs(g)
            yield _real_row("remark-upper", g, record.h, rhs, "<=")


def check_lower_bounds(
    g_from: int, g_to: int, genus_cap: int | None = DEFAULT_GENUS_CAP
) -> Iterator[BoundReport]:
    """Per genus: the exponential lower bounds on f and h, plus the
    improved variant once g log g crosses 599^2."""
    _range_check(g_from, g_to, "genus")
    _check_genus_cap(g_to, genus_cap)
    level = compute_L()
    cutoff = improved_lower_threshold()
    for g in range(g_from, g_to + 1):
        if g < level:
            yield _unmet_row("thm36", g, f"g >= L = {level}")
            yield _unmet_row("cor37", g, f"g >= L = {level}")
            continue
        record = max_order(g, genus_cap)
        with mp.workdps(_DPS):
            rhs = _quarter_sqrt_bound(g)
        yield _real_row("thm36", g, record.f, rhs, ">")
        yield _real_row("cor37", g, record.h, rhs, ">")
        if g >= cutoff:
            with mp.workdps(_DPS):
                rhs = _improved_bound(g)
            yield _real_row("remark-lower-f", g, record.f, rhs, ">")
            yield _real_row("remark-lower-h", g, record.h, rhs, ">")


def check_lemmas(
    x_from: int, x_to: int, g_from: int, g_to: int
) -> Iterator[BoundReport]:
    """The prime-sum lemma over x, then the pi-estimate and primorial
    membership lemmas over g."""
    yield from check_lemma33(x_from, x_to)
    for g in range(g_from, g_to + 1):
        yield from check_lemma34(g, g)
        yield from check_lemma35(g, g)


def check_prime_estimates(
    n_from: int, n_to: int, x_from: int, x_to: int
) -> Iterator[BoundReport]:
    """All four classical estimates: first-n prime sums over n, then the
    pi bounds, the Mertens-type product, and the pi lower bound over x."""
    yield from check_dusart_sum(n_from, n_to)
    yield from check_dusart_pi(x_from, x_to)
    yield from check_dusart_product(max(x_from, 2973), x_to)
    yield from check_rosser(x_from, x_to)


# ---------------------------------------------------------------------------
# named dispatch (shared by the CLI and scripts)

CHECK_NAMES: dict[str, Callable[..., Iterator[BoundReport]]] = {
    "thm31": check_thm31,
    "cor32": check_cor32,
    "remark-upper": check_remark_upper,
    "thm36": check_thm36,
    "cor37": check_cor37,
    "remark-lower": check_remark_lower,
    "lemma33": check_lemma33,
    "lemma34": check_lemma34,
    "lemma35": check_lemma35,
    "dusart-sum": check_dusart_sum,
    "dusart-pi": check_dusart_pi,
    "dusart-product": check_dusart_product,
    "rosser": check_rosser,
}

# checks whose points are genera and whose work is dominated by the DPs;
# these parallelize point-by-point
GENUS_CHECKS = frozenset(
    {"thm31", "cor32", "remark-upper", "thm36", "cor37", "remark-lower"}
)


def default_range(name: str) -> tuple[int, int] | None:
    """Stated sweep range for a check; None means a range is required."""
    if name == "thm31" or name == "cor32":
        return (1, 300)
    if name == "remark-upper":
        return (REMARK_UPPER_START, 1500)
    if name == "thm36" or name == "cor37":
        level = compute_L()
        return (level, level + 100)
    if name == "remark-lower":
        return None  # any in-precondition genus is a deliberate large run
    if name == "lemma33":
        return (23, 10**5)
    if name == "lemma34" or name == "lemma35":
        level = compute_K()
        return (level, level + 500)
    if name == "dusart-sum":
        return (9, 10**4)
    if name == "dusart-pi":
        return (2, 10**5)
    if name == "dusart-product":
        return (2973, 10**5)
    if name == "rosser":
        return (55, 10**5)
    raise KeyError(name)


def run_check(
    name: str, lo: int, hi: int, genus_cap: int | None = DEFAULT_GENUS_CAP
) -> Iterator[BoundReport]:
    """Dispatch one named check over an inclusive range."""
    try:
        fn = CHECK_NAMES[name]
    except KeyError:
        raise KeyError(
            f"unknown check {name!r}; valid names: {', '.join(sorted(CHECK_NAMES))}"
        ) from None
    if name in GENUS_CHECKS:
        return fn(lo, hi, genus_cap)
    return fn(lo, hi)


# ---------------------------------------------------------------------------
# rendering

REPORT_FIELDS = ("name", "point", "lhs", "rhs", "margin", "pass", "note")


def render_value(value: int | Fraction) -> str:
    """Deterministic decimal rendering; exact when short, else 20
    significant digits."""
    if isinstance(value, int):
        return str(value)
    if value.denominator == 1:
        return str(value.numerator)
    scaled = value * 10**12
    if scaled.denominator == 1 and abs(value) < 10**40:
        digits = f"{abs(scaled.numerator):013d}"
        whole, frac = digits[:-12], digits[-12:].rstrip("0")
        sign = "-" if value < 0 else ""
        return f"{sign}{whole}.{frac}"
    with mp.workdps(25):
        approx = mpf(value.numerator) / mpf(value.denominator)
        return mp.nstr(approx, 20)


def report_to_dict(report: BoundReport) -> dict[str, object]:
    """JSON-ready mapping; numeric values as decimal strings."""
    return {
        "name": report.name,
        "point": str(report.point),
        "lhs": render_value(report.lhs),
        "rhs": render_value(report.rhs),
        "margin": render_value(report.margin),
        "pass": report.passed,
        "note": report.note,
    }
