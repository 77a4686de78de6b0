"""Exact prime, factorization, and totient arithmetic.

Everything here works on Python's native arbitrary-precision integers and
is deterministic. All returned objects are immutable; every function is
pure and safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "PrimeTable",
    "Factorization",
    "sieve",
    "is_prime",
    "factor",
    "totient_prime_power",
    "totient",
    "primorial",
]


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit``, in ascending order."""

    limit: int
    primes: tuple[int, ...]

    def count(self) -> int:
        """pi(limit): how many primes the table holds."""
        return len(self.primes)


@dataclass(frozen=True)
class Factorization:
    """A positive integer as an ordered product of prime powers.

    ``entries`` is a tuple of (prime, exponent) pairs, primes strictly
    ascending, exponents >= 1. The empty tuple represents 1.
    """

    entries: tuple[tuple[int, int], ...]

    def value(self) -> int:
        """Multiply the entries back into the represented integer."""
        m = 1
        for p, a in self.entries:
            m *= p**a
        return m

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def sieve(limit: int) -> PrimeTable:
    """Eratosthenes sieve: every prime <= limit, ascending.

    Raises ValueError for limit < 2.
    """
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = bytearray(len(range(start, limit + 1, p)))
    return PrimeTable(limit, tuple(i for i, f in enumerate(flags) if f))


# Shared, grow-on-demand prime list for trial division. Reads and
# replacements of the module global are atomic under the GIL; a racing
# thread at worst recomputes the same tuple.
_TRIAL_PRIMES: tuple[int, ...] = sieve(1 << 10).primes
_TRIAL_LIMIT: int = 1 << 10


def _trial_primes(limit: int) -> tuple[int, ...]:
    global _TRIAL_PRIMES, _TRIAL_LIMIT
    if limit > _TRIAL_LIMIT:
        new_limit = max(limit, 2 * _TRIAL_LIMIT)
        _TRIAL_PRIMES = sieve(new_limit).primes
        _TRIAL_LIMIT = new_limit
    return _TRIAL_PRIMES


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    for p in _trial_primes(math.isqrt(n)):
        if p * p > n:
            break
        if n % p == 0:
            return n == p
    return True


def factor(m: int) -> Factorization:
    """Trial-division factorization of m >= 1.

    Raises ValueError for m <= 0. The toolkit only ever feeds this smooth
    integers (every prime factor small), so trial division is the right
    tool; there is deliberately no large-integer machinery here.
    """
    if m <= 0:
        raise ValueError(f"cannot factor non-positive integer {m}")
    entries: list[tuple[int, int]] = []
    rem = m
    idx = 0
    while rem > 1:
        # grow the table lazily: sizing it from isqrt(m) up front would
        # try to sieve astronomically far for large smooth inputs
        if idx >= len(_TRIAL_PRIMES):
            _trial_primes(2 * _TRIAL_LIMIT)
        p = _TRIAL_PRIMES[idx]
        if p * p > rem:
            entries.append((rem, 1))
            break
        if rem % p == 0:
            a = 0
            while rem % p == 0:
                rem //= p
                a += 1
            entries.append((p, a))
        idx += 1
    return Factorization(tuple(entries))


def totient_prime_power(p: int, alpha: int) -> int:
    """phi(p^alpha) = p^(alpha-1) * (p-1) for prime p, alpha >= 1."""
    if alpha < 1:
        raise ValueError(f"exponent must be >= 1, got {alpha}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p ** (alpha - 1) * (p - 1)


def totient(m: int) -> int:
    """Euler phi of m >= 1, via the prime factorization."""
    result = 1
    for p, a in factor(m):
        result *= p ** (a - 1) * (p - 1)
    return result


def primorial(x: int) -> int:
    """Product of every prime <= x (x >= 2). Exact."""
    if x < 2:
        raise ValueError(f"primorial needs x >= 2, got {x}")
    m = 1
    for p in sieve(x).primes:
        m *= p
    return m
