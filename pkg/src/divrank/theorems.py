"""Machine checks for every stated bound, identity, and conjecture.

Single-n checks evaluate one integer exactly (Fractions throughout);
scan_* functions sweep ranges and return ScanReports. A report that comes
back "verified" is bounded evidence for the scanned range only, never a
proof, and its notes say so in fixed wording.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from .core import (
    Factorization,
    HypothesisViolation,
    Inapplicable,
    SpfSieve,
    divisor_list_of,
    is_prime,
    next_prime_above,
    primes_upto,
)
from .scanner import (
    CHUNK_SIZE_DEFAULT,
    divisors_from_spf,
    effective_sieve_limit,
    register_task,
    run_scan,
)
from .sigma import is_perfect_square, k_ratio, parity_sums_int, profile

BOUNDED_EVIDENCE = (
    "bounded evidence only: exhaustive scan of the stated range; "
    "no claim is made beyond it"
)

PAIRING_ALPHA_GRID = (-2, -1, 0, 1, 2, 3)


@dataclass
class ScanReport:
    """Outcome of one range check: verified, violated, or inapplicable."""

    check: str
    lo: int
    hi: int
    status: str
    violations: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0
    config: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    applicable: int = 0


def _finish(check, lo, hi, violations, applicable, config, notes, t0) -> ScanReport:
    if applicable == 0:
        status = "inapplicable"
    elif violations:
        status = "violated"
    else:
        status = "verified"
    return ScanReport(
        check=check,
        lo=lo,
        hi=hi,
        status=status,
        violations=violations,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
        config=config,
        notes=[*notes, BOUNDED_EVIDENCE],
        applicable=applicable,
    )


# ---------------------------------------------------------------------------
# single-n checks


def check_upper_bound(n: int, sieve: SpfSieve | None = None) -> bool:
    """k(n) < d_2 + 1/d_2 for non-square n >= 2, compared exactly."""
    if n < 2 or is_perfect_square(n):
        raise Inapplicable(f"upper bound is stated for non-squares >= 2, got {n}")
    divs = divisor_list_of(n, sieve)
    se = sum(divs[1::2])
    so = sum(divs[0::2])
    d2 = divs[1]
    return se * d2 < so * (d2 * d2 + 1)


@dataclass(frozen=True)
class LowerBoundResult:
    """Bound outcome for a perfect square, with the equality case called out."""

    n: int
    holds: bool
    equality: bool

    def __bool__(self) -> bool:
        return self.holds


def check_lower_bound(n: int, sieve: SpfSieve | None = None) -> LowerBoundResult:
    """k(n) >= d_2/(d_2^2 + 1) for perfect squares n >= 4; equality iff n = p^2."""
    if n < 4 or not is_perfect_square(n):
        raise Inapplicable(f"lower bound is stated for perfect squares >= 4, got {n}")
    divs = divisor_list_of(n, sieve)
    se = sum(divs[1::2])
    so = sum(divs[0::2])
    d2 = divs[1]
    lhs = se * (d2 * d2 + 1)
    rhs = so * d2
    return LowerBoundResult(n, lhs >= rhs, lhs == rhs)


@dataclass(frozen=True)
class SigmaBoundsResult:
    """Per-clause outcomes for the sigma_e / reciprocal / combined bound chain.

    The tau = 4 clause "2 <= k <= n/4" is advisory: it fails at n = 6, so it
    is reported but never folded into core_ok.
    """

    n: int
    tau: int
    clauses: dict[str, bool]

    @property
    def core_ok(self) -> bool:
        return all(ok for name, ok in self.clauses.items() if name != "tau4_bullet")

    def __bool__(self) -> bool:
        return self.core_ok


def check_sigma_bounds(n: int, sieve: SpfSieve | None = None) -> SigmaBoundsResult:
    """Exact evaluation of the bound chain on sigma_e, 1/sigma_{e,-1}, and k."""
    if n < 2 or is_perfect_square(n):
        raise Inapplicable(f"sigma bounds are stated for non-squares >= 2, got {n}")
    divs = divisor_list_of(n, sieve)
    tau = len(divs)
    se = sum(divs[1::2])
    so = sum(divs[0::2])
    k = Fraction(se, so)
    sig_e_rec = sum(Fraction(1, d) for d in divs[1::2])

    clauses = {
        "sigma_e_lower": Fraction(tau - 2 + n) <= se,
        "sigma_e_upper": se <= Fraction((tau + 2) * n, 4),
        "reciprocal_lower": Fraction(4 * n, (tau - 2) * n + 4) <= 1 / sig_e_rec,
        "reciprocal_upper": 1 / sig_e_rec <= Fraction(n, tau - 1),
        "combined_lower": Fraction(4 * (tau - 2 + n), (tau - 2) * n + 4) <= k,
        "combined_upper": k <= Fraction(n * (tau + 2), 4 * (tau - 1)),
    }
    if tau == 2:
        clauses["prime_case"] = k == n
    elif tau == 4:
        clauses["tau4_bullet"] = 2 <= k <= Fraction(n, 4)
    elif tau == 6:
        clauses["tau6_bullet"] = Fraction(n + 4, n + 1) <= k <= Fraction(2 * n, 5)
    return SigmaBoundsResult(n, tau, clauses)


def check_multiplier(n: int, p: int, a: int, sieve: SpfSieve | None = None) -> bool:
    """k(n * p^a) = k(n) when p is prime, p > n, and tau(n) is even.

    n = 1 is inapplicable: k(1) = 0 is degenerate (no even-rank divisors to
    scale), and indeed k(p^a) = p != 0. Perfect squares are inapplicable too:
    with tau(n) odd the appended divisor blocks alternate rank parity, and
    the identity genuinely fails (e.g. k(9*11) = 113/43 != k(9) = 3/10).
    """
    if n == 1:
        raise Inapplicable("n = 1 has k = 0; the multiplier identity needs n >= 2")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if is_perfect_square(n):
        raise Inapplicable(
            f"the multiplier identity needs tau(n) even; {n} is a perfect square"
        )
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p <= n:
        raise HypothesisViolation(f"multiplier hypothesis needs p > n, got p={p} <= n={n}")
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    return k_ratio(n * p**a, sieve) == k_ratio(n, sieve)


def check_multiplier_chain(n: int, m_factorization: Factorization,
                           sieve: SpfSieve | None = None) -> bool:
    """k(n*m) = k(n) under the chained hypothesis base < p_i at every step."""
    if n == 1:
        raise Inapplicable("n = 1 has k = 0; the multiplier identity needs n >= 2")
    if is_perfect_square(n):
        raise Inapplicable(
            f"the multiplier identity needs tau(n) even; {n} is a perfect square"
        )
    base = n
    ok = True
    for i, (p, e) in enumerate(m_factorization.factors, start=1):
        if p <= base:
            raise HypothesisViolation(
                f"chain hypothesis fails at step {i}: prime {p} <= accumulated {base}",
                index=i,
            )
        ok = check_multiplier(base, p, e, sieve) and ok
        base *= p**e
    return ok and k_ratio(n * m_factorization.n, sieve) == k_ratio(n, sieve)


def check_upper_bound_optimality(p: int, q_list: list[int]) -> bool:
    """k(p^2 q) = p + (q - p^3)/(pq + p^2 + 1) for primes q > p^2, the sequence
    strictly increasing and below p + 1/p."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    ks = []
    for q in q_list:
        if not is_prime(q):
            raise ValueError(f"q must be prime, got {q}")
        if q <= p * p:
            raise ValueError(f"optimality remark needs q > p^2, got q={q} <= {p * p}")
        expected = p + Fraction(q - p**3, p * q + p * p + 1)
        if k_ratio(p * p * q) != expected:
            return False
        ks.append(expected)
    limit = p + Fraction(1, p)
    increasing = all(a < b for a, b in zip(ks, ks[1:]))
    below = all(k < limit for k in ks)
    return increasing and below


def check_pairing(n: int, sieve: SpfSieve | None = None) -> bool:
    """For prime-integer k = p and tau(n) <= 8: d_{2j} = p d_{2j-1} for all j,
    and sigma_{e,a}(n) = p^a sigma_{o,a}(n) exactly for a in -2..3."""
    prof = profile(n, sieve)
    k = prof.k
    if k.denominator != 1 or not is_prime(k.numerator):
        raise Inapplicable(f"pairing is stated for prime integer k, got k({n}) = {k}")
    if prof.tau > 8:
        raise Inapplicable(f"pairing theorem covers tau <= 8, got tau({n}) = {prof.tau}")
    p = k.numerator
    divs = prof.divisors
    if any(divs[i + 1] != p * divs[i] for i in range(0, len(divs), 2)):
        return False
    for alpha in PAIRING_ALPHA_GRID:
        sums = parity_sums_int(n, alpha, sieve)
        if sums.sigma_e != Fraction(p) ** alpha * sums.sigma_o:
            return False
    return True


def extend_with_prime(n: int, q: int, sieve: SpfSieve | None = None) -> int:
    """Extend a prime-k, tau = 6 number by a prime q > n; returns qn after
    verifying tau(qn) = 12, the rank pairing, and the exact divisor interleaving
    [d_1..d_6, q d_1..q d_6]."""
    prof = profile(n, sieve)
    if prof.tau != 6:
        raise Inapplicable(f"extension needs tau(n) = 6, got tau({n}) = {prof.tau}")
    k = prof.k
    if k.denominator != 1 or not is_prime(k.numerator):
        raise Inapplicable(f"extension needs prime integer k, got k({n}) = {k}")
    if not is_prime(q):
        raise HypothesisViolation(f"q must be prime, got {q}")
    if q <= n:
        raise HypothesisViolation(f"extension needs q > n, got q={q} <= n={n}")
    p = k.numerator
    qn = q * n
    divs = divisor_list_of(qn, sieve)
    expected = list(prof.divisors) + [q * d for d in prof.divisors]
    if len(divs) != 12 or divs != expected:
        raise ArithmeticError(f"divisors of {qn} do not interleave as expected")
    if any(divs[i + 1] != p * divs[i] for i in range(0, 12, 2)):
        raise ArithmeticError(f"rank pairing fails on {qn}")
    return qn


def check_unit_fraction_gap(p: int, l: int) -> bool:
    """k(p^l) = (p^{l+1} - p)/(p^{l+2} - 1) for even l, trapped in
    [p/(p^2+1), 1/p) and never a unit fraction."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if l < 2 or l % 2:
        raise ValueError(f"l must be even and >= 2, got {l}")
    k = k_ratio(p**l)
    formula = Fraction(p ** (l + 1) - p, p ** (l + 2) - 1)
    floor_bound = Fraction(p, p * p + 1)
    return (
        k == formula
        and floor_bound <= k < Fraction(1, p)
        and Fraction(1, p + 1) < floor_bound
        and k.numerator > 1
    )


# ---------------------------------------------------------------------------
# chunk tasks for the range scanners


def _upper_bound_chunk(lo, hi, spf, params):
    violations = []
    applicable = 0
    for n in range(max(lo, 2), hi + 1):
        r = isqrt(n)
        if r * r == n:
            continue
        applicable += 1
        divs = divisors_from_spf(n, spf)
        se = sum(divs[1::2])
        so = sum(divs[0::2])
        d2 = divs[1]
        if se * d2 >= so * (d2 * d2 + 1):
            violations.append({
                "n": n,
                "expected": f"k < {d2}+1/{d2}",
                "actual": f"k={se}/{so}",
            })
    return {"violations": violations, "applicable": applicable}


def _lower_bound_chunk(lo, hi, spf, params):
    violations = []
    applicable = 0
    for r in range(max(isqrt(lo - 1) + 1, 2), isqrt(hi) + 1):
        n = r * r
        applicable += 1
        divs = divisors_from_spf(n, spf)
        se = sum(divs[1::2])
        so = sum(divs[0::2])
        d2 = divs[1]
        lhs = se * (d2 * d2 + 1)
        rhs = so * d2
        if lhs < rhs:
            violations.append({
                "n": n,
                "expected": f"k >= {d2}/{d2 * d2 + 1}",
                "actual": f"k={se}/{so}",
            })
        elif (lhs == rhs) != (len(divs) == 3):
            why = "equality" if lhs == rhs else "strict inequality"
            violations.append({
                "n": n,
                "expected": "equality exactly when n is a prime squared",
                "actual": f"{why} with tau={len(divs)}",
            })
    return {"violations": violations, "applicable": applicable}


def _sigma_bounds_chunk(lo, hi, spf, params):
    violations = []
    tau4_failures = []
    applicable = 0
    for n in range(max(lo, 2), hi + 1):
        r = isqrt(n)
        if r * r == n:
            continue
        applicable += 1
        divs = divisors_from_spf(n, spf)
        tau = len(divs)
        se = sum(divs[1::2])
        so = sum(divs[0::2])
        rec = sum(n // d for d in divs[1::2])  # n * sigma_{e,-1}, exact
        bad = []
        if tau - 2 + n > se:
            bad.append("sigma_e_lower")
        if 4 * se > (tau + 2) * n:
            bad.append("sigma_e_upper")
        if 4 * rec > (tau - 2) * n + 4:
            bad.append("reciprocal_lower")
        if rec < tau - 1:
            bad.append("reciprocal_upper")
        if 4 * (tau - 2 + n) * so > ((tau - 2) * n + 4) * se:
            bad.append("combined_lower")
        if 4 * (tau - 1) * se > n * (tau + 2) * so:
            bad.append("combined_upper")
        if tau == 2 and se != n * so:
            bad.append("prime_case")
        if tau == 6 and ((n + 4) * so > (n + 1) * se or 5 * se > 2 * n * so):
            bad.append("tau6_bullet")
        if bad:
            violations.append({
                "n": n,
                "expected": "bound chain holds",
                "actual": "failed clauses: " + ",".join(bad),
            })
        if tau == 4 and (2 * so > se or 4 * se > n * so):
            tau4_failures.append(n)
    return {"violations": violations, "applicable": applicable, "tau4_failures": tau4_failures}


def _pairing_chunk(lo, hi, spf, params):
    violations = []
    applicable = 0
    limit = len(spf) - 1
    tau_cap = params.get("tau_cap")
    for n in range(max(lo, 2), hi + 1):
        divs = divisors_from_spf(n, spf)
        se = sum(divs[1::2])
        so = sum(divs[0::2])
        if se % so:
            continue
        p = se // so
        if p < 2 or not (spf[p] == p if p <= limit else is_prime(p)):
            continue
        if tau_cap is not None and len(divs) > tau_cap:
            continue
        applicable += 1
        if any(divs[i + 1] != p * divs[i] for i in range(0, len(divs), 2)):
            violations.append({
                "n": n,
                "expected": f"d_2j = {p} d_2j-1 for all j",
                "actual": f"divisors {divs}",
            })
            continue
        if params.get("power_identity"):
            for alpha in PAIRING_ALPHA_GRID:
                if alpha >= 0:
                    ea = sum(d**alpha for d in divs[1::2])
                    oa = sum(d**alpha for d in divs[0::2])
                else:
                    a = -alpha
                    ea = Fraction(sum((n // d) ** a for d in divs[1::2]), n**a)
                    oa = Fraction(sum((n // d) ** a for d in divs[0::2]), n**a)
                if ea != Fraction(p) ** alpha * oa:
                    violations.append({
                        "n": n,
                        "expected": f"sigma_e,{alpha} = {p}^{alpha} sigma_o,{alpha}",
                        "actual": f"{ea} vs {Fraction(p)**alpha * oa}",
                    })
    return {"violations": violations, "applicable": applicable}


def _conjecture1_chunk(lo, hi, spf, params):
    violations = []
    applicable = 0
    for n in range(max(lo, 2), hi + 1):
        divs = divisors_from_spf(n, spf)
        se = sum(divs[1::2])
        so = sum(divs[0::2])
        if se % so:
            continue
        applicable += 1
        k = se // so
        d2 = divs[1]
        if k != d2:
            violations.append({
                "n": n, "expected": f"k = d_2 = {d2}", "actual": f"k={k}",
            })
        if n % 2 == 0 and k != 2:
            violations.append({
                "n": n, "expected": "even index ratio numbers have k = 2", "actual": f"k={k}",
            })
        if n % 2 and len(divs) % 4 == 2 and n % 3 == 0 and k != 3:
            violations.append({
                "n": n,
                "expected": "odd n with tau = 2 mod 4 and 3 | n has k = 3",
                "actual": f"k={k}",
            })
    return {"violations": violations, "applicable": applicable}


def _conjecture3_chunk(lo, hi, spf, params):
    # domain: n = 1 and the perfect squares, the only integers with k < 1
    seen: dict[str, list[int]] = {}
    for r in range(isqrt(lo - 1) + 1, isqrt(hi) + 1):
        n = r * r
        divs = divisors_from_spf(n, spf)
        se = sum(divs[1::2])
        so = sum(divs[0::2])
        g = gcd(se, so)
        seen.setdefault(f"{se // g}/{so // g}", []).append(n)
    return {"seen": seen}


def _conjecture3_merge(state, frag):
    acc = state["seen"]
    for key, members in frag["seen"].items():
        acc.setdefault(key, []).extend(members)
    return state


def _violations_merge(state, frag):
    state["violations"].extend(frag["violations"])
    state["applicable"] += frag["applicable"]
    if "tau4_failures" in frag:
        state.setdefault("tau4_failures", []).extend(frag["tau4_failures"])
    return state


def _violations_empty(params):
    return {"violations": [], "applicable": 0}


register_task("upper_bound", _upper_bound_chunk, _violations_merge, _violations_empty)
register_task("lower_bound", _lower_bound_chunk, _violations_merge, _violations_empty)
register_task("sigma_bounds", _sigma_bounds_chunk, _violations_merge,
              lambda params: {"violations": [], "applicable": 0, "tau4_failures": []})
register_task("pairing", _pairing_chunk, _violations_merge, _violations_empty)
register_task("conjecture1", _conjecture1_chunk, _violations_merge, _violations_empty)
register_task("conjecture3", _conjecture3_chunk, _conjecture3_merge,
              lambda params: {"seen": {}})


# conjecture 2 is the pairing sweep with no tau cap; share the chunk task
register_task("conjecture2", _pairing_chunk, _violations_merge, _violations_empty)


# ---------------------------------------------------------------------------
# range scanners


def _scan_violations(check, task, limit, params, workers, chunk_size, checkpoint,
                     max_chunks, sieve_limit=None, notes=(), config_extra=None):
    t0 = time.perf_counter()
    lo = 1
    state = run_scan(task, lo, limit, params, workers=workers,
                     chunk_size=chunk_size, sieve_limit=sieve_limit,
                     checkpoint=checkpoint, max_chunks=max_chunks)
    config = {"check": check, "lo": lo, "hi": limit, "chunk_size": chunk_size,
              "sieve_limit": effective_sieve_limit(limit, sieve_limit),
              **params, **(config_extra or {})}
    notes = list(notes)
    if state.get("tau4_failures"):
        hits = state["tau4_failures"]
        notes.append(
            "advisory tau=4 clause '2 <= k <= n/4' fails for "
            f"{len(hits)} n (first: {hits[:5]}); reported per clause, not as a violation"
        )
    return _finish(check, lo, limit, state["violations"], state["applicable"],
                   config, notes, t0)


def scan_upper_bound(limit: int, *, workers: int = 1, chunk_size: int = CHUNK_SIZE_DEFAULT,
                     sieve_limit: int | None = None, checkpoint: str | None = None,
                     max_chunks: int | None = None) -> ScanReport:
    """k(n) < d_2 + 1/d_2 over all non-squares in [2, limit]."""
    return _scan_violations("upper-bound", "upper_bound", limit, {}, workers,
                            chunk_size, checkpoint, max_chunks, sieve_limit)


def scan_lower_bound(limit: int, *, workers: int = 1, chunk_size: int = CHUNK_SIZE_DEFAULT,
                     sieve_limit: int | None = None, checkpoint: str | None = None,
                     max_chunks: int | None = None) -> ScanReport:
    """k(n) >= d_2/(d_2^2+1) over squares in [4, limit], equality iff n = p^2."""
    return _scan_violations("lower-bound", "lower_bound", limit, {}, workers,
                            chunk_size, checkpoint, max_chunks, sieve_limit)


def scan_sigma_bounds(limit: int, *, workers: int = 1, chunk_size: int = CHUNK_SIZE_DEFAULT,
                      sieve_limit: int | None = None, checkpoint: str | None = None,
                      max_chunks: int | None = None) -> ScanReport:
    """Bound chain over all non-squares in [2, limit]; tau=4 bullet is advisory."""
    return _scan_violations("sigma-bounds", "sigma_bounds", limit, {}, workers,
                            chunk_size, checkpoint, max_chunks, sieve_limit)


def scan_pairing(limit: int, *, workers: int = 1, chunk_size: int = CHUNK_SIZE_DEFAULT,
                 sieve_limit: int | None = None, checkpoint: str | None = None,
                 max_chunks: int | None = None) -> ScanReport:
    """Rank pairing plus the power identity for prime-k, tau <= 8 numbers."""
    return _scan_violations("pairing", "pairing", limit,
                            {"tau_cap": 8, "power_identity": True}, workers,
                            chunk_size, checkpoint, max_chunks, sieve_limit)


def scan_conjecture1(limit: int, *, workers: int = 1, chunk_size: int = CHUNK_SIZE_DEFAULT,
                     sieve_limit: int | None = None, checkpoint: str | None = None,
                     max_chunks: int | None = None) -> ScanReport:
    """Integral k implies k = d_2 (plus the even/odd specializations)."""
    return _scan_violations(
        "conjecture-1", "conjecture1", limit, {}, workers, chunk_size, checkpoint,
        max_chunks, sieve_limit,
        notes=["n = 1 (k = 0) is excluded: d_2(1) does not exist"],
    )


def scan_conjecture2(limit: int, *, workers: int = 1, chunk_size: int = CHUNK_SIZE_DEFAULT,
                     sieve_limit: int | None = None, checkpoint: str | None = None,
                     max_chunks: int | None = None) -> ScanReport:
    """Rank pairing for every prime-k number up to limit, no tau bound."""
    return _scan_violations("conjecture-2", "conjecture2", limit,
                            {"tau_cap": None, "power_identity": False}, workers,
                            chunk_size, checkpoint, max_chunks, sieve_limit)


def scan_conjecture3(limit: int, *, workers: int = 1, chunk_size: int = CHUNK_SIZE_DEFAULT,
                     sieve_limit: int | None = None, checkpoint: str | None = None,
                     max_chunks: int | None = None) -> ScanReport:
    """Every k < 1 class holds at most one n (domain: perfect squares and 1)."""
    t0 = time.perf_counter()
    state = run_scan("conjecture3", 1, limit, workers=workers,
                     chunk_size=chunk_size, sieve_limit=sieve_limit,
                     checkpoint=checkpoint, max_chunks=max_chunks)
    violations = []
    for key, members in state["seen"].items():
        if len(members) > 1:
            violations.append({
                "n": members[1],
                "expected": f"k = {key} held only by {members[0]}",
                "actual": f"shared by {members}",
            })
    config = {"check": "conjecture-3", "lo": 1, "hi": limit, "chunk_size": chunk_size,
              "sieve_limit": effective_sieve_limit(limit, sieve_limit)}
    notes = ["domain restricted to perfect squares and n = 1, the only integers with k < 1"]
    return _finish("conjecture-3", 1, limit, violations, len(state["seen"]),
                   config, notes, t0)


def scan_multiplier(n_max: int = 1000, samples: int = 500, exponents=(1, 2, 3),
                    seed: int = 2) -> ScanReport:
    """Seeded random-sample check that k(n p^a) = k(n) for the first prime p > n."""
    if n_max < 2:
        raise ValueError(f"need n_max >= 2, got {n_max}")
    t0 = time.perf_counter()
    rng = random.Random(seed)
    violations = []
    for _ in range(samples):
        n = rng.randint(2, n_max)
        while is_perfect_square(n):  # identity is stated for tau(n) even
            n = rng.randint(2, n_max)
        p = next_prime_above(n)
        a = rng.choice(exponents)
        k = k_ratio(n)
        k2 = k_ratio(n * p**a)
        if k2 != k:
            violations.append({
                "n": n,
                "expected": f"k({n}*{p}^{a}) = k({n}) = {k}",
                "actual": str(k2),
            })
    config = {"check": "multiplier", "lo": 2, "hi": n_max, "samples": samples,
              "exponents": list(exponents), "seed": seed}
    return _finish("multiplier", 2, n_max, violations, samples, config, [], t0)


def check_prime_power_distinct(limit: int) -> ScanReport:
    """k(p^a) pairwise distinct over even a >= 2 with p^a <= limit."""
    if limit < 4:
        raise ValueError(f"need limit >= 4, got {limit}")
    t0 = time.perf_counter()
    seen: dict[Fraction, int] = {}
    violations = []
    applicable = 0
    for p in primes_upto(isqrt(limit)):
        a = 2
        while p**a <= limit:
            n = p**a
            applicable += 1
            k = k_ratio(n)
            if k in seen:
                violations.append({
                    "n": n,
                    "expected": f"k distinct from k({seen[k]})",
                    "actual": f"k={k} shared",
                })
            else:
                seen[k] = n
            a += 2
    config = {"check": "prime-power-distinct", "lo": 4, "hi": limit}
    return _finish("prime-power-distinct", 4, limit, violations, applicable, config, [], t0)


scan_prime_power_distinct = check_prime_power_distinct


def scan_unit_fraction(limit: int) -> ScanReport:
    """Unit-fraction gap for every p^l <= limit with even l."""
    if limit < 4:
        raise ValueError(f"need limit >= 4, got {limit}")
    t0 = time.perf_counter()
    violations = []
    applicable = 0
    for p in primes_upto(isqrt(limit)):
        l = 2
        while p**l <= limit:
            applicable += 1
            if not check_unit_fraction_gap(p, l):
                violations.append({
                    "n": p**l,
                    "expected": f"k({p}^{l}) in [p/(p^2+1), 1/p) and not a unit fraction",
                    "actual": str(k_ratio(p**l)),
                })
            l += 2
    config = {"check": "unit-fraction", "lo": 4, "hi": limit}
    return _finish("unit-fraction", 4, limit, violations, applicable, config, [], t0)
