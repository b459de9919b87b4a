"""Partition counts split by smallest-part parity, and the identities behind them.

P_O(n) and P_E(n) count the partitions of n whose smallest part is odd or
even.  The fast route is the convolution P_O(n) - P_E(n) =
sum_{i=1..n} S(i) * p(n-i); every other operation here is either a
brute-force oracle for that difference or an equivalent signed sum that
the identity checks compare against it.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import partitions, svalues
from .partitions import CountTable


@dataclass(frozen=True)
class ParityReport:
    """Counts for one n: p(n), P_O - P_E, P_O, and P_E.

    Construction validates that the counts are nonnegative and consistent.
    """

    n: int
    p_n: int
    diff: int
    p_odd: int
    p_even: int

    def __post_init__(self):
        if self.p_odd < 0 or self.p_even < 0:
            raise ValueError("partition counts cannot be negative")
        if self.p_odd + self.p_even != self.p_n:
            raise ValueError(f"p_odd + p_even = {self.p_odd + self.p_even} != p({self.n}) = {self.p_n}")
        if self.p_odd - self.p_even != self.diff:
            raise ValueError(f"p_odd - p_even = {self.p_odd - self.p_even} != diff = {self.diff}")


def parity_difference(n: int, table: CountTable) -> int:
    """P_O(n) - P_E(n) via the convolution sum_{i=1..n} s_of(i) * p(n-i).

    Terms with i > n would vanish (p of a negative argument is 0), so the
    sum stops at i = n, where it picks up s_of(n) * p(0).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if table.n_max < n - 1:
        raise ValueError(f"need p(0..{n - 1}) but table only holds p(0..{table.n_max})")
    return sum(svalues.s_of(i) * table[n - i] for i in range(1, n + 1))


def parity_counts(n: int, table: CountTable) -> ParityReport:
    """Solve P_O = (p(n) + diff) / 2 and P_E = (p(n) - diff) / 2 exactly."""
    if n < 1:
        raise ValueError("n must be positive")
    if table.n_max < n:
        raise ValueError(f"need p(0..{n}) but table only holds p(0..{table.n_max})")
    diff = parity_difference(n, table)
    p_n = table[n]
    if (p_n + diff) % 2 != 0:
        raise RuntimeError(f"p({n}) = {p_n} and difference {diff} disagree in parity")
    p_odd = (p_n + diff) // 2
    return ParityReport(n=n, p_n=p_n, diff=diff, p_odd=p_odd, p_even=p_n - p_odd)


def parity_counts_oracle(n: int) -> ParityReport:
    """Tally smallest-part parity by enumerating every partition of n."""
    if n < 1:
        raise ValueError("n must be positive")
    p_odd = 0
    p_even = 0
    for pi in partitions.enumerate_partitions(n):
        if partitions.smallest_part(pi) % 2 == 1:
            p_odd += 1
        else:
            p_even += 1
    return ParityReport(n=n, p_n=p_odd + p_even, diff=p_odd - p_even, p_odd=p_odd, p_even=p_even)


def t_sum_enum(n: int) -> int:
    """Sum of the initial odd-frequency run length over all partitions of n."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(partitions.t_chain_length(pi) for pi in partitions.enumerate_partitions(n))


def t_sum_formula(n: int, table: CountTable) -> int:
    """The same convolution as parity_difference; the odd-frequency run sum equals it."""
    return parity_difference(n, table)


def count_smallest_part_pie(n: int, i: int, table: CountTable) -> int:
    """Number of partitions of n with smallest part exactly i, by inclusion-exclusion.

    Evaluates sum over distinct-part partitions pi with largest part i and
    weight <= n of (-1)^(s-1) * p(n - |pi|), where s is the number of parts
    of pi.
    """
    if n < 1 or not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    if table.n_max < n - i:
        raise ValueError(f"need p(0..{n - i}) but table only holds p(0..{table.n_max})")
    total = 0
    for pi in partitions.enumerate_distinct_with_largest(i, n):
        sign = -1 if len(pi) % 2 == 0 else 1
        total += sign * table[n - pi.weight]
    return total


def c_signed_convolution(n: int, table: CountTable) -> int:
    """Sum over nonempty gap-free partitions pi of weight <= n of (-1)^h(pi) * p(n - |pi|)."""
    if n < 1:
        raise ValueError("n must be positive")
    if table.n_max < n - 1:
        raise ValueError(f"need p(0..{n - 1}) but table only holds p(0..{table.n_max})")
    total = 0
    for pi in partitions.enumerate_c_partitions(n):
        sign = -1 if partitions.h_even_frequency_count(pi) % 2 == 1 else 1
        total += sign * table[n - pi.weight]
    return total


def distinct_signed_convolution(n: int, table: CountTable) -> int:
    """Sum over nonempty distinct-part partitions pi of weight <= n of (-1)^rank * p(n - |pi|)."""
    if n < 1:
        raise ValueError("n must be positive")
    if table.n_max < n - 1:
        raise ValueError(f"need p(0..{n - 1}) but table only holds p(0..{table.n_max})")
    total = 0
    for weight in range(1, n + 1):
        for pi in partitions.enumerate_distinct_partitions(weight):
            sign = -1 if partitions.rank(pi) % 2 == 1 else 1
            total += sign * table[n - weight]
    return total
