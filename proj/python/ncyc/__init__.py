"""Factor even permutations into two n-cycles, or into a commutator."""

from ._ncyc import (
    Permutation,
    ParityError,
    bertram_coverage,
    commutator,
    commutator_decomposition,
    compose,
    conjugate,
    conjugator_between_cycles,
    cycle_decomposition,
    exhaustive_verify,
    format_cycles,
    inverse,
    is_full_cycle,
    pair_count,
    parity,
    parse_cycles,
    parse_permutation,
    power,
    random_even_permutation,
    two_n_cycle_factorization,
    verify_factorization,
    write_count,
)

__all__ = [
    "Permutation",
    "ParityError",
    "bertram_coverage",
    "commutator",
    "commutator_decomposition",
    "compose",
    "conjugate",
    "conjugator_between_cycles",
    "cycle_decomposition",
    "exhaustive_verify",
    "format_cycles",
    "inverse",
    "is_full_cycle",
    "pair_count",
    "parity",
    "parse_cycles",
    "parse_permutation",
    "power",
    "random_even_permutation",
    "two_n_cycle_factorization",
    "verify_factorization",
    "write_count",
]
