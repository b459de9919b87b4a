"""Cross-checking suites: every identity against its brute-force oracle.

Each suite compares the formula path with an independent enumeration (or a
structural invariant) over a bounded range and reports the first
counterexample if any.  `run_all` backs the ``verify`` CLI command; a
suite that raises is reported as failed rather than aborting the run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import isqrt

from . import parity, partitions, svalues

# Known values of S(1..37); the thirteen entries whose sign needed a Pell
# search carry their minimal (y0, x0) witness.
KNOWN_S_VALUES = {
    1: 1, 2: -1, 3: 2, 4: -2, 5: 1, 6: 0, 7: 1, 8: -2, 9: 0, 10: 2,
    11: 0, 12: -1, 13: -2, 14: 2, 15: 1, 16: 0, 17: -2, 18: 2, 19: -2,
    20: 0, 21: 0, 22: 3, 23: 0, 24: -2, 25: -2, 26: 1, 27: 0, 28: 2,
    29: 0, 30: 0, 31: 0, 32: -2, 33: 0, 34: 0, 35: 1, 36: 0, 37: 0,
}
KNOWN_PELL_WITNESSES = {
    3: (4, 13), 4: (2, 11), 8: (4, 17), 10: (8, 25), 13: (6, 23),
    14: (2, 19), 17: (6, 25), 18: (4, 23), 19: (8, 29), 24: (8, 31),
    25: (2, 25), 28: (14, 43), 32: (10, 37),
}


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checks: int
    detail: str | None = None


def check_count_table(max_n: int):
    """p(n) from the recurrence equals the enumeration count for n <= max_n."""
    table = partitions.build_count_table(max_n)
    checks = 0
    for n in range(max_n + 1):
        checks += 1
        counted = sum(1 for _ in partitions.enumerate_partitions(n))
        if counted != table[n]:
            return checks, f"n={n}: expected {counted} (enumerated), got {table[n]}"
    return checks, None


def check_conjugation_involution(max_n: int):
    checks = 0
    for n in range(max_n + 1):
        for pi in partitions.enumerate_partitions(n):
            checks += 1
            conj = partitions.conjugate(pi)
            if conj.weight != pi.weight or partitions.conjugate(conj) != pi:
                return checks, f"n={n}: conjugation not an involution at {pi.parts}"
    return checks, None


def check_c_partition_bijection(max_n: int):
    """Conjugation maps nonempty gap-free partitions of n onto distinct-part ones."""
    checks = 0
    for n in range(1, max_n + 1):
        checks += 1
        gap_free = [pi for pi in partitions.enumerate_c_partitions(n) if pi.weight == n]
        image = {partitions.conjugate(pi) for pi in gap_free}
        distinct = set(partitions.enumerate_distinct_partitions(n))
        if len(image) != len(gap_free) or image != distinct:
            return checks, (f"n={n}: expected image of size {len(distinct)} matching "
                            f"distinct-part partitions, got {len(image)}")
    return checks, None


def check_rank_parity_correspondence(max_n: int):
    """rank(conjugate(pi)) and h(pi) share parity on nonempty gap-free partitions."""
    checks = 0
    for pi in partitions.enumerate_c_partitions(max_n):
        checks += 1
        r = partitions.rank(partitions.conjugate(pi))
        h = partitions.h_even_frequency_count(pi)
        if r % 2 != h % 2:
            return checks, f"pi={pi.parts}: expected rank parity {h % 2}, got {r % 2}"
    return checks, None


def check_t_chain_characterization(max_n: int):
    checks = 0
    for n in range(max_n + 1):
        for pi in partitions.enumerate_partitions(n):
            checks += 1
            t = partitions.t_chain_length(pi)
            freqs = partitions.frequencies(pi)
            prefix_odd = all(freqs[j] % 2 == 1 for j in range(t))
            next_freq = freqs[t] if t < len(freqs) else 0
            if not prefix_odd or next_freq % 2 != 0:
                return checks, f"n={n}: t={t} inconsistent with frequencies {freqs}"
    return checks, None


def check_distinct_by_largest(max_n: int, max_i: int):
    """enumerate_distinct_with_largest agrees with filtering the distinct stream."""
    checks = 0
    for weight in range(1, max_n + 1):
        by_largest = {}
        for pi in partitions.enumerate_distinct_partitions(weight):
            by_largest.setdefault(pi.parts[0], set()).add(pi)
        for i in range(1, min(max_i, weight) + 1):
            checks += 1
            direct = {pi for pi in partitions.enumerate_distinct_with_largest(i, weight)
                      if pi.weight == weight}
            if direct != by_largest.get(i, set()):
                return checks, (f"weight={weight}, i={i}: expected "
                                f"{sorted(p.parts for p in by_largest.get(i, set()))}, got "
                                f"{sorted(p.parts for p in direct)}")
    return checks, None


def check_s_formula_vs_oracle(max_i: int):
    checks = 0
    for i in range(1, max_i + 1):
        checks += 1
        expected = svalues.s_oracle(i)
        got = svalues.s_of(i)
        if got != expected:
            return checks, f"i={i}: expected {expected} (oracle), got {got}"
    return checks, None


def check_factorization_soundness(max_i: int):
    checks = 0
    for i in range(1, max_i + 1):
        checks += 1
        m = 24 * i + 1
        fact = svalues.signed_factorize(m)
        product = 1
        for p, e in fact.factors:
            product *= p**e
            if not svalues.is_signed_prime(p):
                return checks, f"i={i}: {p} is not a signed prime"
        if product != m:
            return checks, f"i={i}: expected product {m}, got {product}"
        magnitudes = [abs(p) for p, _ in fact.factors]
        if len(set(magnitudes)) != len(magnitudes):
            return checks, f"i={i}: repeated prime magnitude in {fact.factors}"
    return checks, None


def check_pell_invariants(max_i: int):
    checks = 0
    seen = set()
    for i in range(1, max_i + 1):
        for p, _e in svalues.signed_factorize(24 * i + 1).factors:
            if p % 24 != 1 or p in seen:
                continue
            seen.add(p)
            checks += 1
            w = svalues.pell_witness(p)
            if w.x0 * w.x0 - 6 * w.y0 * w.y0 != p:
                return checks, f"p={p}: expected x0^2 - 6*y0^2 = {p}, got witness {w}"
            if w.y0 % 2 != 0 or w.x0 % 2 != 1:
                return checks, f"p={p}: parity of witness {w} is wrong"
            if w.residue_mod_12 not in (1, 5, 7, 11):
                return checks, f"p={p}: residue {w.residue_mod_12} outside 1/5/7/11"
            for y in range(w.y0):
                square = 6 * y * y + p
                if square >= 0 and isqrt(square) ** 2 == square:
                    return checks, f"p={p}: y={y} beats y0={w.y0}"
    return checks, None


def check_multiplicativity(pairs: int = 20, limit: int = 10**5, seed: int = 1729):
    """t_of(m1 * m2) = t_of(m1) * t_of(m2) on random pairs with disjoint prime support."""
    rng = random.Random(seed)
    checks = 0
    while checks < pairs:
        m1 = 6 * rng.randrange(1, limit // 6) + 1
        m2 = 6 * rng.randrange(1, limit // 6) + 1
        support1 = {abs(p) for p, _ in svalues.signed_factorize(m1).factors}
        support2 = {abs(p) for p, _ in svalues.signed_factorize(m2).factors}
        if support1 & support2:
            continue
        checks += 1
        expected = svalues.t_of(m1) * svalues.t_of(m2)
        got = svalues.t_of(m1 * m2)
        if got != expected:
            return checks, f"m1={m1}, m2={m2}: expected {expected}, got {got}"
    return checks, None


def check_smallest_part_identity(max_n: int):
    """Convolution difference equals the enumerated P_O - P_E."""
    table = partitions.build_count_table(max_n)
    checks = 0
    for n in range(1, max_n + 1):
        checks += 1
        expected = parity.parity_counts_oracle(n).diff
        got = parity.parity_difference(n, table)
        if got != expected:
            return checks, f"n={n}: expected {expected} (oracle), got {got}"
    return checks, None


def check_odd_chain_identity(max_n: int):
    """Sum of odd-frequency run lengths equals the convolution difference."""
    table = partitions.build_count_table(max_n)
    checks = 0
    for n in range(1, max_n + 1):
        checks += 1
        expected = parity.t_sum_enum(n)
        got = parity.t_sum_formula(n, table)
        if got != expected:
            return checks, f"n={n}: expected {expected} (enumerated), got {got}"
    return checks, None


def check_signed_convolution_chain(max_n: int):
    """Gap-free and distinct-part signed convolutions both match the enumerated sum."""
    table = partitions.build_count_table(max_n)
    checks = 0
    for n in range(1, max_n + 1):
        checks += 1
        expected = parity.t_sum_enum(n)
        via_gap_free = parity.c_signed_convolution(n, table)
        via_distinct = parity.distinct_signed_convolution(n, table)
        if via_gap_free != expected or via_distinct != expected:
            return checks, (f"n={n}: expected {expected}, got gap-free {via_gap_free}, "
                            f"distinct {via_distinct}")
    return checks, None


def check_pie_smallest_part(max_n: int):
    """Inclusion-exclusion count of a fixed smallest part matches enumeration."""
    table = partitions.build_count_table(max_n)
    checks = 0
    for n in range(1, max_n + 1):
        tally = {}
        for pi in partitions.enumerate_partitions(n):
            s = partitions.smallest_part(pi)
            tally[s] = tally.get(s, 0) + 1
        signed_total = 0
        for i in range(1, n + 1):
            checks += 1
            expected = tally.get(i, 0)
            got = parity.count_smallest_part_pie(n, i, table)
            if got != expected:
                return checks, f"n={n}, i={i}: expected {expected}, got {got}"
            signed_total += got if i % 2 == 1 else -got
        checks += 1
        diff = parity.parity_difference(n, table)
        if signed_total != diff:
            return checks, f"n={n}: expected signed total {diff}, got {signed_total}"
    return checks, None


def check_parity_report_consistency(max_n: int):
    table = partitions.build_count_table(max_n)
    checks = 0
    for n in range(1, max_n + 1):
        checks += 1
        expected = parity.parity_counts_oracle(n)
        got = parity.parity_counts(n, table)
        if got != expected:
            return checks, f"n={n}: expected {expected}, got {got}"
    return checks, None


def check_known_s_values(max_i: int):
    checks = 0
    for i in range(1, min(max_i, 37) + 1):
        checks += 1
        expected = KNOWN_S_VALUES[i]
        got = svalues.s_of(i)
        if got != expected:
            return checks, f"i={i}: expected {expected}, got {got}"
        if i in KNOWN_PELL_WITNESSES:
            checks += 1
            w = svalues.pell_witness(24 * i + 1)
            if (w.y0, w.x0) != KNOWN_PELL_WITNESSES[i]:
                return checks, (f"i={i}: expected witness {KNOWN_PELL_WITNESSES[i]}, "
                                f"got {(w.y0, w.x0)}")
    return checks, None


def run_all(max_n: int, max_i: int) -> list[SuiteResult]:
    """Run every suite at the given bounds, in a fixed order."""
    if max_n < 1 or max_i < 1:
        raise ValueError("bounds must be positive")
    suites = [
        ("count-table-vs-enumeration", lambda: check_count_table(max_n)),
        ("conjugation-involution", lambda: check_conjugation_involution(max_n)),
        ("c-partition-bijection", lambda: check_c_partition_bijection(max_n)),
        ("rank-parity-correspondence", lambda: check_rank_parity_correspondence(max_n)),
        ("t-chain-characterization", lambda: check_t_chain_characterization(max_n)),
        ("distinct-by-largest-decomposition", lambda: check_distinct_by_largest(max_n, max_i)),
        ("s-formula-vs-oracle", lambda: check_s_formula_vs_oracle(max_i)),
        ("factorization-soundness", lambda: check_factorization_soundness(max_i)),
        ("pell-witness-invariants", lambda: check_pell_invariants(max_i)),
        ("multiplicativity-random-pairs", check_multiplicativity),
        ("smallest-part-identity", lambda: check_smallest_part_identity(max_n)),
        ("odd-chain-identity", lambda: check_odd_chain_identity(max_n)),
        ("signed-convolution-chain", lambda: check_signed_convolution_chain(max_n)),
        ("pie-smallest-part", lambda: check_pie_smallest_part(max_n)),
        ("parity-report-consistency", lambda: check_parity_report_consistency(max_n)),
        ("known-s-values", lambda: check_known_s_values(max_i)),
    ]
    results = []
    for name, suite in suites:
        try:
            checks, detail = suite()
        except Exception as error:  # a crashed suite is a failed suite
            checks, detail = 0, f"raised {type(error).__name__}: {error}"
        results.append(SuiteResult(name=name, passed=detail is None, checks=checks, detail=detail))
    return results
