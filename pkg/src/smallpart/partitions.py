"""Integer partitions: exact counting, enumeration, and per-partition statistics.

Everything here is exact integer arithmetic.  Enumeration streams have a
documented deterministic order so that downstream identity checks are
reproducible.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


class Partition:
    """A partition: a nonincreasing tuple of positive integer parts.

    The empty partition is allowed and has weight 0.
    """

    __slots__ = ("parts", "weight")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        prev = None
        for part in parts:
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers, got {part!r}")
            if prev is not None and part > prev:
                raise ValueError(f"parts must be nonincreasing, got {parts}")
            prev = part
        self.parts = parts
        self.weight = sum(parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def __repr__(self) -> str:
        return f"Partition({self.parts})"


def frequencies(pi: Partition) -> tuple[int, ...]:
    """Return the frequency vector (f_1, ..., f_k) of ``pi``.

    f_j is the number of parts equal to j and k is the largest part, so the
    last entry is nonzero for a nonempty partition.  The empty partition
    maps to the empty tuple.
    """
    if not pi.parts:
        return ()
    freqs = [0] * pi.parts[0]
    for part in pi.parts:
        freqs[part - 1] += 1
    return tuple(freqs)


def from_frequencies(freqs: Iterable[int]) -> Partition:
    """Rebuild a Partition from a frequency vector; trailing zeros are ignored."""
    freqs = tuple(freqs)
    parts = []
    for size in range(len(freqs), 0, -1):
        count = freqs[size - 1]
        if not isinstance(count, int) or count < 0:
            raise ValueError(f"frequencies must be nonnegative integers, got {count!r}")
        parts.extend([size] * count)
    return Partition(parts)


class CountTable:
    """Exact partition counts p(0..n_max).

    Indexing with a negative argument returns 0 (the usual convention for
    convolution sums); indexing past n_max raises.
    """

    __slots__ = ("values", "n_max")

    def __init__(self, values: Iterable[int]):
        values = tuple(values)
        if not values or values[0] != 1:
            raise ValueError("a count table must start with p(0) = 1")
        self.values = values
        self.n_max = len(values) - 1

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.n_max:
            raise ValueError(f"p({n}) requested but table only holds p(0..{self.n_max})")
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __repr__(self) -> str:
        return f"CountTable(n_max={self.n_max})"


def build_count_table(n_max: int) -> CountTable:
    """Compute p(0), ..., p(n_max) with the pentagonal-number recurrence.

    p(n) = sum over k >= 1 of (-1)^(k-1) * [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)],
    all in exact integer arithmetic.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    values = [0] * (n_max + 1)
    values[0] = 1
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            pent = k * (3 * k - 1) // 2
            if pent > n:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * values[n - pent]
            pent += k  # k(3k+1)/2
            if pent <= n:
                total += sign * values[n - pent]
            k += 1
        values[n] = total
    return CountTable(values)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic order.

    The stream starts at (n) and ends at (1, 1, ..., 1); n = 0 yields the
    single empty partition.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition(())
        return
    parts = [n]
    yield Partition(parts)
    while True:
        # Rightmost part that can still shrink; everything after it is 1s.
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        remainder = len(parts) - i  # the trailing 1s plus one unit peeled off parts[i]
        parts[i] -= 1
        cap = parts[i]
        del parts[i + 1 :]
        while remainder > 0:
            chunk = min(cap, remainder)
            parts.append(chunk)
            remainder -= chunk
        yield Partition(parts)


def _distinct_desc(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing part tuples summing to n with parts <= max_part."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        # Parts below `first` sum to at most first*(first-1)/2.
        if n - first <= first * (first - 1) // 2:
            for rest in _distinct_desc(n - first, first - 1):
                yield (first,) + rest


def enumerate_distinct_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n into distinct parts, in reverse-lexicographic order.

    n = 0 yields the empty partition; callers wanting only nonempty ones
    should skip it.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    for parts in _distinct_desc(n, n):
        yield Partition(parts)


def _distinct_tails(budget: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing tuples with parts <= max_part and sum <= budget.

    Ordered lexicographically: the empty tuple first, then grouped by
    ascending largest part.
    """
    yield ()
    for first in range(1, max_part + 1):
        if first > budget:
            break
        for rest in _distinct_tails(budget - first, first - 1):
            yield (first,) + rest


def enumerate_distinct_with_largest(i: int, max_weight: int) -> Iterator[Partition]:
    """Yield the distinct-part partitions with largest part exactly i and weight <= max_weight.

    The number of parts of each yielded partition is just its len().  Order
    is lexicographic on the part tuple: (i) first, then (i, 1), (i, 2),
    (i, 2, 1), ...
    """
    if i < 1:
        raise ValueError("largest part must be positive")
    if max_weight < i:
        return
    for tail in _distinct_tails(max_weight - i, i - 1):
        yield Partition((i,) + tail)


def smallest_part(pi: Partition) -> int:
    """Return the smallest part; undefined (raises) for the empty partition."""
    if not pi.parts:
        raise ValueError("the empty partition has no smallest part")
    return pi.parts[-1]


def rank(pi: Partition) -> int:
    """Return largest part minus number of parts; raises for the empty partition."""
    if not pi.parts:
        raise ValueError("the empty partition has no rank")
    return pi.parts[0] - len(pi.parts)


def t_chain_length(pi: Partition) -> int:
    """Length of the initial run of odd frequencies.

    Returns the unique t >= 0 such that parts 1..t each occur an odd number
    of times while part t+1 occurs an even number of times (absent sizes
    count as frequency 0).  The empty partition gives 0.
    """
    freqs = frequencies(pi)
    t = 0
    while t < len(freqs) and freqs[t] % 2 == 1:
        t += 1
    return t


def conjugate(pi: Partition) -> Partition:
    """Return the conjugate partition (transpose of the Ferrers diagram).

    Computed as the suffix sums of the frequency vector; an involution that
    preserves weight.
    """
    freqs = frequencies(pi)
    parts = []
    running = 0
    for count in reversed(freqs):
        running += count
        parts.append(running)
    parts.reverse()
    return Partition(parts)


def is_c_partition(pi: Partition) -> bool:
    """True iff the partition is gap-free: every size below the largest part occurs.

    The empty partition is vacuously gap-free; callers working with the set
    of nonempty gap-free partitions must exclude it themselves.
    """
    return all(count >= 1 for count in frequencies(pi))


def _c_freq_vectors(position: int, largest: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Frequency vectors (f_position, ..., f_largest), all >= 1, with weighted sum <= budget."""
    if position > largest:
        yield ()
        return
    # Positions position+1..largest each need frequency >= 1.
    min_rest = largest * (largest + 1) // 2 - position * (position + 1) // 2
    count = 1
    while position * count <= budget - min_rest:
        for rest in _c_freq_vectors(position + 1, largest, budget - position * count):
            yield (count,) + rest
        count += 1


def enumerate_c_partitions(max_weight: int) -> Iterator[Partition]:
    """Yield every nonempty gap-free partition of weight <= max_weight exactly once.

    Ordered by largest part ascending, then lexicographically by frequency
    vector: (1), (1,1), (1,1,1), ..., (2,1), ...
    """
    if max_weight < 0:
        raise ValueError("max_weight must be nonnegative")
    largest = 1
    while largest * (largest + 1) // 2 <= max_weight:
        for freqs in _c_freq_vectors(1, largest, max_weight):
            yield from_frequencies(freqs)
        largest += 1


def h_even_frequency_count(pi: Partition) -> int:
    """Number of distinct part sizes occurring an even (nonzero) number of times."""
    return sum(1 for count in frequencies(pi) if count >= 1 and count % 2 == 0)
