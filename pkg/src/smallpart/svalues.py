"""Signed counts of distinct-part partitions by rank parity.

S(i) sums (-1)^rank over the partitions of i into distinct parts, counting
even-rank ones positively and odd-rank ones negatively.  Instead of
enumerating, S(i) is evaluated exactly as a multiplicative function of
m = 24*i + 1: factor m into signed primes (a prime q = 1 mod 6 stays +q,
a prime q = 5 mod 6 becomes -q), apply a closed per-prime-power rule, and
multiply.  The one step that is not a direct formula is the sign at a
prime p = 1 (mod 24), which is settled by the least nonnegative y0 making
6*y0^2 + p a perfect square x0^2: the class of x0 + 3*y0 mod 12 decides
it.

`s_oracle` is the brute-force counterpart used to cross-check everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from . import partitions


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0 or q % 3 == 0:
        return False
    d = 5
    while d * d <= q:
        if q % d == 0 or q % (d + 2) == 0:
            return False
        d += 6
    return True


def is_signed_prime(p: int) -> bool:
    """True iff p is a prime = 1 (mod 6) or the negative of a prime = 5 (mod 6)."""
    if p == 0 or not _is_prime(abs(p)):
        return False
    if p > 0:
        return p % 6 == 1
    return (-p) % 6 == 5


@dataclass(frozen=True)
class SignedFactorization:
    """m = product of p^e over signed primes p with distinct absolute values."""

    m: int
    factors: tuple[tuple[int, int], ...]  # (signed prime, exponent), |p| ascending


def signed_factorize(m: int) -> SignedFactorization:
    """Factor a positive m = 1 (mod 6) over signed primes by trial division.

    m = 1 returns an empty factor list.  Since m is coprime to 6, only
    primes of the form 6k +- 1 can divide it.
    """
    if m < 1 or m % 6 != 1:
        raise ValueError(f"m must be a positive integer = 1 (mod 6), got {m}")
    factors = []
    rest = m
    q = 5
    while q * q <= rest:
        if rest % q == 0:
            exponent = 0
            while rest % q == 0:
                rest //= q
                exponent += 1
            factors.append((q if q % 6 == 1 else -q, exponent))
        q += 2 if q % 6 == 5 else 4
    if rest > 1:
        factors.append((rest if rest % 6 == 1 else -rest, 1))
    return SignedFactorization(m, tuple(factors))


@dataclass(frozen=True)
class PellWitness:
    """Minimal solution data for x^2 - 6*y^2 = p with p = 1 (mod 24).

    y0 is the least nonnegative integer making 6*y0^2 + p a perfect square,
    x0 the corresponding root, and sign +1 when x0 + 3*y0 = +-1 (mod 12),
    -1 when it is +-5 (mod 12).
    """

    p: int
    y0: int
    x0: int
    sign: int

    @property
    def residue_mod_12(self) -> int:
        return (self.x0 + 3 * self.y0) % 12


@lru_cache(maxsize=None)
def pell_witness(p: int) -> PellWitness:
    """Search y = 0, 1, 2, ... for the minimal witness of x^2 - 6*y^2 = p.

    Requires p = 1 (mod 24) with |p| prime.  The minimal solution is known
    to satisfy y < sqrt(|p|), so the search is bounded; running past the
    bound means a broken precondition and raises RuntimeError.
    """
    if p % 24 != 1 or not is_signed_prime(p):
        raise ValueError(f"need a signed prime = 1 (mod 24), got {p}")
    bound = isqrt(abs(p)) + 1
    for y in range(bound + 1):
        square = 6 * y * y + p
        if square >= 0:
            x = isqrt(square)
            if x * x == square:
                residue = (x + 3 * y) % 12
                sign = 1 if residue in (1, 11) else -1
                return PellWitness(p, y, x, sign)
    raise RuntimeError(f"no solution of x^2 - 6*y^2 = {p} with y <= {bound}")


def t_prime_power(p: int, e: int) -> int:
    """Value of the multiplicative function at a signed prime power p^e.

    By the residue of p mod 24 (negative p reduced into 0..23):
    residue != 1 with e odd gives 0; residues 13 and 19 with e even give 1;
    residue 7 with e even gives (-1)^(e/2); residue 1 gives e+1 with the
    Pell sign positive and (-1)^e * (e+1) with it negative.
    """
    if not is_signed_prime(p):
        raise ValueError(f"{p} is not a signed prime")
    if e < 1:
        raise ValueError(f"exponent must be positive, got {e}")
    residue = p % 24  # in {1, 7, 13, 19} for any signed prime
    if residue == 1:
        if pell_witness(p).sign > 0:
            return e + 1
        return e + 1 if e % 2 == 0 else -(e + 1)
    if e % 2 == 1:
        return 0
    if residue == 7:
        return -1 if (e // 2) % 2 == 1 else 1
    return 1


def t_of(m: int) -> int:
    """Evaluate the multiplicative function at m = 1 (mod 6); t_of(1) = 1."""
    result = 1
    for p, e in signed_factorize(m).factors:
        value = t_prime_power(p, e)
        if value == 0:
            return 0
        result *= value
    return result


@lru_cache(maxsize=None)
def s_of(i: int) -> int:
    """S(i): even-rank minus odd-rank count over distinct-part partitions of i."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    return t_of(24 * i + 1)


def s_oracle(i: int) -> int:
    """S(i) by brute force: sum of (-1)^rank over distinct-part partitions of i."""
    if i < 1:
        raise ValueError("i must be positive")
    total = 0
    for pi in partitions.enumerate_distinct_partitions(i):
        total += -1 if partitions.rank(pi) % 2 else 1
    return total
