"""Exact partition counts split by the parity of the smallest part.

The headline quantity is P_O(n) - P_E(n): partitions of n with odd
smallest part minus those with even smallest part.  It equals the
convolution sum over i of S(i) * p(n - i), where S(i) is the even-rank
minus odd-rank count of distinct-part partitions of i.  S(i) in turn is
evaluated through a multiplicative rule over signed prime factorizations
of 24*i + 1, with a Pell-equation search fixing the sign at primes
congruent to 1 mod 24.  Brute-force enumeration oracles cross-check every
identity at desk scale.
"""

__version__ = "0.1.0"

from .parity import (
    ParityReport,
    c_signed_convolution,
    count_smallest_part_pie,
    distinct_signed_convolution,
    parity_counts,
    parity_counts_oracle,
    parity_difference,
    t_sum_enum,
    t_sum_formula,
)
from .partitions import (
    CountTable,
    Partition,
    build_count_table,
    conjugate,
    enumerate_c_partitions,
    enumerate_distinct_partitions,
    enumerate_distinct_with_largest,
    enumerate_partitions,
    frequencies,
    from_frequencies,
    h_even_frequency_count,
    is_c_partition,
    rank,
    smallest_part,
    t_chain_length,
)
from .svalues import (
    PellWitness,
    SignedFactorization,
    is_signed_prime,
    pell_witness,
    s_of,
    s_oracle,
    signed_factorize,
    t_of,
    t_prime_power,
)

__all__ = [
    "CountTable",
    "ParityReport",
    "Partition",
    "PellWitness",
    "SignedFactorization",
    "__version__",
    "build_count_table",
    "c_signed_convolution",
    "conjugate",
    "count_smallest_part_pie",
    "distinct_signed_convolution",
    "enumerate_c_partitions",
    "enumerate_distinct_partitions",
    "enumerate_distinct_with_largest",
    "enumerate_partitions",
    "frequencies",
    "from_frequencies",
    "h_even_frequency_count",
    "is_c_partition",
    "is_signed_prime",
    "parity_counts",
    "parity_counts_oracle",
    "parity_difference",
    "pell_witness",
    "rank",
    "s_of",
    "s_oracle",
    "signed_factorize",
    "smallest_part",
    "t_chain_length",
    "t_of",
    "t_prime_power",
    "t_sum_enum",
    "t_sum_formula",
]
