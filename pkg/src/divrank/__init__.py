"""Divisor-rank parity sums and the G_k classification of positive integers.

With d_1 = 1 < d_2 < ... < d_tau(n) = n the ascending divisors of n, the
library computes sigma_e,a / sigma_o,a (power sums over even/odd divisor
ranks), the exact ratio k(n) = sigma_e(n)/sigma_o(n), classifies ranges of
integers into G_k classes, and machine-checks the bounds, identities, and
conjectures that govern them over exhaustive ranges.
"""

from .classify import (
    GkTable,
    enumerate_index_ratio,
    is_index_ratio,
    members_of_k,
    merge_tables,
    scan_range,
)
from .core import (
    AlphaZeroError,
    CheckpointError,
    Factorization,
    HypothesisViolation,
    Inapplicable,
    RangeOverlapError,
    ScanInterrupted,
    SieveMemoryError,
    SpfSieve,
    build_spf_sieve,
    divisor_list_of,
    divisors_sorted,
    factorize,
    format_rational,
    is_prime,
    parse_rational,
    rational_of,
)
from .sigma import (
    DivisorProfile,
    ParitySums,
    is_perfect_square,
    k_ratio,
    parity_sums_int,
    parity_sums_real,
    prime_power_closed_form,
    profile,
    tau_parity,
)
from .theorems import (
    LowerBoundResult,
    ScanReport,
    SigmaBoundsResult,
    check_lower_bound,
    check_multiplier,
    check_multiplier_chain,
    check_pairing,
    check_prime_power_distinct,
    check_sigma_bounds,
    check_unit_fraction_gap,
    check_upper_bound,
    check_upper_bound_optimality,
    extend_with_prime,
    scan_conjecture1,
    scan_conjecture2,
    scan_conjecture3,
    scan_lower_bound,
    scan_multiplier,
    scan_pairing,
    scan_prime_power_distinct,
    scan_sigma_bounds,
    scan_unit_fraction,
    scan_upper_bound,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaZeroError",
    "CheckpointError",
    "DivisorProfile",
    "Factorization",
    "GkTable",
    "HypothesisViolation",
    "Inapplicable",
    "LowerBoundResult",
    "ParitySums",
    "RangeOverlapError",
    "ScanInterrupted",
    "ScanReport",
    "SieveMemoryError",
    "SigmaBoundsResult",
    "SpfSieve",
    "build_spf_sieve",
    "check_lower_bound",
    "check_multiplier",
    "check_multiplier_chain",
    "check_pairing",
    "check_prime_power_distinct",
    "check_sigma_bounds",
    "check_unit_fraction_gap",
    "check_upper_bound",
    "check_upper_bound_optimality",
    "divisor_list_of",
    "divisors_sorted",
    "enumerate_index_ratio",
    "extend_with_prime",
    "factorize",
    "format_rational",
    "is_index_ratio",
    "is_perfect_square",
    "is_prime",
    "k_ratio",
    "members_of_k",
    "merge_tables",
    "parity_sums_int",
    "parity_sums_real",
    "parse_rational",
    "prime_power_closed_form",
    "profile",
    "rational_of",
    "scan_conjecture1",
    "scan_conjecture2",
    "scan_conjecture3",
    "scan_lower_bound",
    "scan_multiplier",
    "scan_pairing",
    "scan_prime_power_distinct",
    "scan_range",
    "scan_sigma_bounds",
    "scan_unit_fraction",
    "scan_upper_bound",
    "tau_parity",
]
