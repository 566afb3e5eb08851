"""fibmod: Pisano periods, good numbers, and Wall-Sun-Sun prime scanning.

Invariants of the Fibonacci sequence modulo m — the period, the rank of
apparition, and the per-period zero count — computed both by direct
iteration and by fast factorization-based paths that are continuously
audited against each other.  On top of that substrate: good-number
classification, self-square enumeration, and a checkpointed, resumable
Wall-Sun-Sun prime scanner.
"""

from .arith import (
    Factorization,
    factorize,
    is_prime,
    lcm_all,
    mul_mod,
    primes_in_range,
    sieve_upto,
    two_adic_split,
)
from .classify import (
    GoodnessReport,
    GoodPrimeEntry,
    goodness_report,
    is_good_direct,
    is_good_fast,
    is_good_prime,
    period_divisor_class,
    zero_count_odd,
    zero_count_period_pattern,
)
from .errors import AnomalyError, CheckpointError
from .fib import (
    FIB_EXACT_CAP,
    FibMatrix,
    binomial_expansion_rhs,
    doubling_rhs,
    fib_exact,
    fib_pair_mod,
    matrix_pow_mod,
    subtraction_rhs,
)
from .pisano import (
    PisanoProfile,
    PrimePowerPeriod,
    lifting_exponent,
    pisano_direct,
    pisano_fast,
    prime_period,
    prime_power_period,
    profile,
    rank_of_apparition,
    zero_count,
    zero_count_direct,
)
from .wss import (
    OddSelfSquareReport,
    ScanCheckpoint,
    SelfSquareRecord,
    WssRecord,
    cofactor_mod,
    enumerate_self_square,
    legendre5,
    load_checkpoint,
    odd_self_square_check,
    scan_wss,
    self_square_test,
    two_power_valuation_check,
    wss_check,
)

__version__ = "0.1.0"

__all__ = [
    "AnomalyError",
    "CheckpointError",
    "FIB_EXACT_CAP",
    "Factorization",
    "FibMatrix",
    "GoodPrimeEntry",
    "GoodnessReport",
    "OddSelfSquareReport",
    "PisanoProfile",
    "PrimePowerPeriod",
    "ScanCheckpoint",
    "SelfSquareRecord",
    "WssRecord",
    "binomial_expansion_rhs",
    "cofactor_mod",
    "doubling_rhs",
    "enumerate_self_square",
    "factorize",
    "fib_exact",
    "fib_pair_mod",
    "goodness_report",
    "is_good_direct",
    "is_good_fast",
    "is_good_prime",
    "is_prime",
    "lcm_all",
    "legendre5",
    "lifting_exponent",
    "load_checkpoint",
    "matrix_pow_mod",
    "mul_mod",
    "odd_self_square_check",
    "period_divisor_class",
    "pisano_direct",
    "pisano_fast",
    "prime_period",
    "prime_power_period",
    "primes_in_range",
    "profile",
    "rank_of_apparition",
    "scan_wss",
    "self_square_test",
    "sieve_upto",
    "subtraction_rhs",
    "two_adic_split",
    "two_power_valuation_check",
    "wss_check",
    "zero_count",
    "zero_count_direct",
    "zero_count_odd",
    "zero_count_period_pattern",
]
