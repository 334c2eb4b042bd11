"""Counting partitions by the 2-adic behavior of their SYT dimension.

a(n) counts partitions of n with odd dimension, a2(n) those with dimension
congruent to 2 mod 4, m4(n) those with dimension not divisible by 4, and
p(n) all partitions.  a2 is computed by two independent routes (a two-case
recursion on the top binary bit, and a direct sum of weight-pattern counts)
that are asserted equal on every call.
"""

from __future__ import annotations

from math import comb
from typing import NamedTuple


class BinarySupport(NamedTuple):
    """Exponent sets of the binary expansion: all of them, and those >= 1."""

    support: frozenset[int]
    support_prime: frozenset[int]


class WeightPattern(NamedTuple):
    """Prescribed tower row weights for dimension 2 mod 4, shifted at rows k-1, k.

    `entries[i]` is the required weight of row i; indices beyond the stored
    tuple are implicitly the binary digits b_i of n (all zero there).
    """

    k: int
    entries: tuple[int, ...]


class CensusMod4(NamedTuple):
    """Counts (a0, a1, a2, a3) of partitions of n by dimension residue mod 4."""

    n: int
    counts: tuple[int, int, int, int]


def _check_nonnegative(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")


def binary_digits(n: int) -> tuple[int, ...]:
    """Little-endian binary digits of n; () for 0."""
    _check_nonnegative(n)
    return tuple((n >> i) & 1 for i in range(n.bit_length()))


def binary_support(n: int) -> BinarySupport:
    _check_nonnegative(n)
    support = frozenset(i for i in range(n.bit_length()) if (n >> i) & 1)
    return BinarySupport(support, support - {0})


def is_sparse(n: int) -> bool:
    """True iff n has no two adjacent ones in binary (a fibbinary number)."""
    if n < 1:
        raise ValueError(f"sparseness is defined for n >= 1, got {n}")
    return n & (n >> 1) == 0


def nu(n: int) -> int:
    """Number of ones in the binary expansion of n >= 1."""
    if n < 1:
        raise ValueError(f"nu is defined for n >= 1, got {n}")
    return n.bit_count()


def count_odd(n: int) -> int:
    """a(n): partitions of n with odd dimension; 2 to the sum of binary exponents."""
    _check_nonnegative(n)
    if n == 0:
        return 1
    return 1 << sum(i for i in range(n.bit_length()) if (n >> i) & 1)


def t_count(k: int, w: int) -> int:
    """Number of 2^k-tuples of 2-cores with total size w, for w <= 3.

    The sizes a single 2-core can take matter here: there is one 2-core each
    of size 0, 1 and 3, and none of size 2.
    """
    _check_nonnegative(k)
    if not 0 <= w <= 3:
        raise ValueError(f"tuple weight must be in 0..3, got {w}")
    slots = 1 << k
    if w == 0:
        return 1
    if w == 1:
        return slots
    if w == 2:
        return comb(slots, 2)
    return comb(slots, 3) + slots


def weight_pattern(n: int, k: int) -> WeightPattern:
    """Row-weight sequence forced by v2(dimension) = 1 with the shift at bit k."""
    if k not in binary_support(n).support_prime:
        raise ValueError(f"k={k} is not a nonzero binary exponent of n={n}")
    digits = binary_digits(n)
    entries = [digits[i] if i < len(digits) else 0 for i in range(max(len(digits), k + 1))]
    entries[k - 1] += 2
    entries[k] = 0
    while entries and entries[-1] == 0:
        entries.pop()
    return WeightPattern(k, tuple(entries))


def pattern_count(pattern: WeightPattern) -> int:
    """Product of t_count over the pattern's rows (empty product is 1)."""
    result = 1
    for i, w in enumerate(pattern.entries):
        if w:
            result *= t_count(i, w)
    return result


def a2_by_pattern_sum(n: int) -> int:
    """a2(n) as the direct sum of pattern counts over nonzero binary exponents."""
    _check_nonnegative(n)
    return sum(
        pattern_count(weight_pattern(n, k))
        for k in sorted(binary_support(n).support_prime)
    )


def a2_by_recursion(n: int) -> int:
    """a2(n) by the two-case recursion on n = 2^R + m with m < 2^R.

    The case split is on the bit below the top one: when it is set the
    closing factor is (C(2^(R-1), 3) + 2^(R-1)) * a(m) / 2^(R-1), and the
    division is exact because R-1 is then a binary exponent of m.
    """
    _check_nonnegative(n)
    if n <= 1:
        return 0
    top = n.bit_length() - 1
    m = n - (1 << top)
    half = 1 << (top - 1)
    rest = (1 << top) * a2_by_recursion(m)
    if m & half:
        quotient, remainder = divmod(count_odd(m), half)
        assert remainder == 0
        return rest + (comb(half, 3) + half) * quotient
    return rest + comb(half, 2) * count_odd(m)


def a2(n: int) -> int:
    """Partitions of n with dimension congruent to 2 mod 4.

    Computed by the recursion and re-derived by the direct pattern sum; the
    two routes are asserted equal.
    """
    value = a2_by_recursion(n)
    assert value == a2_by_pattern_sum(n)
    return value


def a2_sparse(n: int) -> int:
    """Closed form for a2(n) when n is sparse."""
    if not is_sparse(n):
        raise ValueError(f"{n} is not sparse")
    if n % 2:
        return 0 if n == 1 else a2_sparse(n - 1)
    total = count_odd(n) * (n - 2 * nu(n))
    quotient, remainder = divmod(total, 8)
    assert remainder == 0
    return quotient


def m4(n: int) -> int:
    """Partitions of n with dimension not divisible by 4."""
    return count_odd(n) + a2(n)


_PARTITION_COUNTS = [1]


def partition_count(n: int) -> int:
    """p(n), by the pentagonal-number recurrence (exact, memoized)."""
    _check_nonnegative(n)
    cache = _PARTITION_COUNTS
    for m in range(len(cache), n + 1):
        total = 0
        k = 1
        while True:
            pent = k * (3 * k - 1) // 2
            if pent > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * cache[m - pent]
            pent2 = k * (3 * k + 1) // 2
            if pent2 <= m:
                total += sign * cache[m - pent2]
            k += 1
        cache.append(total)
    return cache[n]


def count_div4(n: int) -> int:
    """Partitions of n with dimension divisible by 4."""
    value = partition_count(n) - count_odd(n) - a2(n)
    assert value >= 0
    return value
