"""Classify ranges of integers into G_k classes keyed by k(n) = sigma_e/sigma_o.

A GkTable maps each canonical rational k to the ascending list of its
members in a range; every n belongs to exactly one class. Index ratio
numbers are the n whose k(n) is a nonnegative integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .core import RangeOverlapError, SpfSieve, divisor_list_of, parse_rational
from .scanner import (
    CHUNK_SIZE_DEFAULT,
    divisors_from_spf,
    register_task,
    run_scan,
)


@dataclass
class GkTable:
    """Partition of [lo, hi] into G_k classes; member lists ascend."""

    lo: int
    hi: int
    classes: dict[Fraction, list[int]] = field(default_factory=dict)

    def members(self, k: Fraction) -> list[int]:
        return self.classes.get(k, [])

    def sorted_by_smallest_member(self) -> list[tuple[Fraction, list[int]]]:
        return sorted(self.classes.items(), key=lambda kv: kv[1][0])

    def total_members(self) -> int:
        return sum(len(v) for v in self.classes.values())


def is_index_ratio(n: int, sieve: SpfSieve | None = None) -> bool:
    """True iff sigma_o(n) divides sigma_e(n)."""
    divs = divisor_list_of(n, sieve)
    return sum(divs[1::2]) % sum(divs[0::2]) == 0


def _gk_chunk(lo, hi, spf, params):
    classes: dict[str, list[int]] = {}
    for n in range(lo, hi + 1):
        divs = divisors_from_spf(n, spf)
        se = sum(divs[1::2])
        so = sum(divs[0::2])
        g = gcd(se, so)
        classes.setdefault(f"{se // g}/{so // g}", []).append(n)
    return {"classes": classes}


def _gk_merge(state, frag):
    acc = state["classes"]
    for key, members in frag["classes"].items():
        acc.setdefault(key, []).extend(members)
    return state


def _irn_chunk(lo, hi, spf, params):
    members = []
    for n in range(lo, hi + 1):
        divs = divisors_from_spf(n, spf)
        if sum(divs[1::2]) % sum(divs[0::2]) == 0:
            members.append(n)
    return {"members": members}


def _irn_merge(state, frag):
    state["members"].extend(frag["members"])
    return state


register_task("gk", _gk_chunk, _gk_merge, lambda params: {"classes": {}})
register_task("irn", _irn_chunk, _irn_merge, lambda params: {"members": []})


def scan_range(lo: int, hi: int, sieve: SpfSieve | None = None, *,
               workers: int = 1, chunk_size: int = CHUNK_SIZE_DEFAULT,
               sieve_limit: int | None = None,
               checkpoint: str | None = None, max_chunks: int | None = None) -> GkTable:
    """Classify every n in [lo, hi] into its G_k class.

    Deterministic for any worker count; `checkpoint` makes the scan
    resumable and `max_chunks` bounds this call's chunk budget (raising
    ScanInterrupted once state is saved).
    """
    if sieve is not None and sieve_limit is None:
        sieve_limit = sieve.limit
    state = run_scan(
        "gk", lo, hi,
        workers=workers, chunk_size=chunk_size, sieve_limit=sieve_limit,
        checkpoint=checkpoint, max_chunks=max_chunks,
    )
    classes = {}
    for key, members in state["classes"].items():
        num, den = key.split("/")
        classes[Fraction(int(num), int(den))] = members
    return GkTable(lo, hi, classes)


def members_of_k(k: Fraction | str, limit: int, sieve: SpfSieve | None = None,
                 workers: int = 1) -> list[int]:
    """All n <= limit with k(n) = k, ascending."""
    if isinstance(k, str):
        k = parse_rational(k)
    table = scan_range(1, limit, sieve, workers=workers)
    return table.members(k)


def enumerate_index_ratio(limit: int, sieve: SpfSieve | None = None,
                          workers: int = 1) -> list[int]:
    """Ascending list of all index ratio numbers <= limit."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    state = run_scan(
        "irn", 1, limit,
        workers=workers,
        sieve_limit=sieve.limit if sieve is not None else None,
    )
    return state["members"]


def merge_tables(a: GkTable, b: GkTable) -> GkTable:
    """Union of two tables over disjoint adjacent ranges; empty ranges are identities."""
    if a.lo > a.hi:
        return GkTable(b.lo, b.hi, {k: list(v) for k, v in b.classes.items()})
    if b.lo > b.hi:
        return GkTable(a.lo, a.hi, {k: list(v) for k, v in a.classes.items()})
    first, second = (a, b) if a.lo <= b.lo else (b, a)
    if first.hi >= second.lo:
        raise RangeOverlapError(
            f"ranges [{a.lo}, {a.hi}] and [{b.lo}, {b.hi}] overlap"
        )
    if first.hi + 1 != second.lo:
        raise RangeOverlapError(
            f"ranges [{a.lo}, {a.hi}] and [{b.lo}, {b.hi}] are not adjacent"
        )
    classes: dict[Fraction, list[int]] = {}
    for key, members in first.classes.items():
        classes[key] = list(members)
    for key, members in second.classes.items():
        classes.setdefault(key, []).extend(members)
    return GkTable(first.lo, second.hi, classes)
