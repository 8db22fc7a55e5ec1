"""Exact integer substrate: factorization, SPF sieve, ordered divisors, rationals.

All arithmetic uses Python's arbitrary-precision integers, so divisor sums
can never overflow or wrap. Rationals are stdlib ``fractions.Fraction``,
which is always in canonical reduced form with a positive denominator and
renders as "num/den" (eliding "/1").
"""

from __future__ import annotations

import re
from array import array
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

DEFAULT_SIEVE_MEMORY_BYTES = 512 * 1024 * 1024


class SieveMemoryError(MemoryError):
    """Requested sieve limit exceeds the configured memory budget."""


class Inapplicable(ValueError):
    """Input lies outside the domain a check is stated for."""


class HypothesisViolation(ValueError):
    """A theorem hypothesis fails; `index` names the failing step when chained."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class AlphaZeroError(ValueError):
    """alpha = 0 makes the closed form's denominator vanish; use tau counts."""


class RangeOverlapError(ValueError):
    """Tables to merge cover overlapping or non-adjacent ranges."""


class CheckpointError(RuntimeError):
    """Checkpoint file is corrupt or was written under a different configuration."""


class ScanInterrupted(RuntimeError):
    """A chunk-budgeted scan stopped early; state was saved to `checkpoint`."""

    def __init__(self, checkpoint, last_n):
        super().__init__(f"scan interrupted after n={last_n}; checkpoint saved to {checkpoint}")
        self.checkpoint = checkpoint
        self.last_n = last_n


@dataclass(frozen=True)
class Factorization:
    """n together with its (prime, exponent) pairs, primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    @property
    def tau(self) -> int:
        t = 1
        for _, e in self.factors:
            t *= e + 1
        return t


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def next_prime_above(n: int) -> int:
    """Smallest prime strictly greater than n."""
    m = n + 1
    if m <= 2:
        return 2
    if m % 2 == 0:
        m += 1
    while not is_prime(m):
        m += 2
    return m


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit via a byte sieve."""
    if limit < 2:
        return []
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = b"\x00" * ((limit - start) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division; empty for n = 1."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    factors = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    d = 5
    while d * d <= m:
        for p in (d, d + 2):
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                factors.append((p, e))
        d += 6
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


class SpfSieve:
    """Immutable smallest-prime-factor table for 2 <= m <= limit.

    Safe to share across workers; lookups are O(1) and factorization via
    the table is O(log n).
    """

    def __init__(self, limit: int, table: array):
        self.limit = limit
        self._table = table

    def smallest_factor(self, m: int) -> int:
        if not 2 <= m <= self.limit:
            raise ValueError(f"query {m} outside sieve range [2, {self.limit}]")
        return self._table[m]

    def is_prime(self, m: int) -> bool:
        return m >= 2 and self._table[m] == m

    def factorize(self, n: int) -> Factorization:
        if n < 1:
            raise ValueError(f"factorize requires n >= 1, got {n}")
        if n > self.limit:
            return factorize(n)
        spf = self._table
        factors = []
        m = n
        while m > 1:
            p = spf[m]
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        return Factorization(n, tuple(factors))

    def divisors(self, n: int) -> list[int]:
        """Ascending divisor list of n <= limit."""
        if not 1 <= n <= self.limit:
            raise ValueError(f"divisors query {n} outside sieve range [1, {self.limit}]")
        return _divisors_from_spf(n, self._table)


def build_spf_sieve(limit: int, memory_budget: int = DEFAULT_SIEVE_MEMORY_BYTES) -> SpfSieve:
    """Smallest-prime-factor table up to `limit` (vectorized construction).

    Raises SieveMemoryError when the table would exceed `memory_budget` bytes.
    """
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    # int32 table plus a transient numpy copy during construction
    needed = 8 * (limit + 1)
    if needed > memory_budget:
        raise SieveMemoryError(
            f"sieve to {limit} needs about {needed} bytes, over the {memory_budget}-byte budget; "
            "raise memory_budget to allow it"
        )
    spf = np.zeros(limit + 1, dtype=np.int32)
    spf[2::2] = 2
    for p in range(3, isqrt(limit) + 1, 2):
        if spf[p] == 0:
            view = spf[p * p :: 2 * p]
            view[view == 0] = p
    # remaining zeros at odd positions are primes above sqrt(limit)
    rest = np.nonzero(spf == 0)[0]
    spf[rest] = rest
    table = array("i")
    table.frombytes(spf.astype(np.int32, copy=False).tobytes())
    return SpfSieve(limit, table)


def _divisors_from_spf(n: int, spf) -> list[int]:
    # hot path for range scans: factor via the table, expand, sort
    divs = [1]
    m = n
    while m > 1:
        p = spf[m]
        base = len(divs)
        pk = 1
        while m % p == 0:
            m //= p
            pk *= p
            divs.extend(d * pk for d in divs[:base])
    divs.sort()
    return divs


def divisors_sorted(f: Factorization) -> list[int]:
    """Ascending list of all divisors of f.n (mixed-radix expansion, then sort)."""
    divs = [1]
    for p, e in f.factors:
        base = len(divs)
        pk = 1
        for _ in range(e):
            pk *= p
            divs.extend(d * pk for d in divs[:base])
    divs.sort()
    return divs


def divisor_list_of(n: int, sieve: SpfSieve | None = None) -> list[int]:
    """Ascending divisors of n, via the sieve when it covers n."""
    if sieve is not None and n <= sieve.limit:
        return sieve.divisors(n)
    return divisors_sorted(factorize(n))


def rational_of(num: int, den: int = 1) -> Fraction:
    """Canonical nonnegative rational num/den; rejects den = 0 and negatives."""
    if den == 0:
        raise ValueError("denominator must be nonzero")
    if den < 0 or num < 0:
        raise ValueError(f"rational must be nonnegative with den >= 1, got {num}/{den}")
    return Fraction(num, den)


_RATIONAL_RE = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" or "num" into a canonical Fraction."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return rational_of(num, den)


def format_rational(q: Fraction) -> str:
    """Canonical "num/den" rendering, "/den" elided when den = 1."""
    return str(q)


def reduced_pair(num: int, den: int) -> tuple[int, int]:
    """(num, den) in lowest terms without constructing a Fraction."""
    g = gcd(num, den)
    return num // g, den // g
