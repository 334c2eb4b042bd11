"""Integer partitions, hook lengths, and exact SYT dimension arithmetic.

A partition is represented as a plain tuple of weakly decreasing positive
integers; `()` is the empty partition.  Cells are 1-based `(row, col)` pairs.
All arithmetic is exact (Python ints), never floating point.
"""

from __future__ import annotations

from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Cell = tuple[int, int]

EMPTY: Partition = ()

# Ceiling for the definitional SYT counter; above this the backtracking
# search explodes combinatorially.
BRUTE_FORCE_LIMIT = 12


def validate_partition(parts: Sequence[int]) -> Partition:
    """Return `parts` as a Partition tuple, or raise ValueError."""
    out = tuple(parts)
    for i, part in enumerate(out):
        if not isinstance(part, int) or isinstance(part, bool):
            raise ValueError(f"partition parts must be integers, got {part!r}")
        if part < 1:
            raise ValueError(f"partition parts must be positive, got {part}")
        if i > 0 and out[i - 1] < part:
            raise ValueError(
                f"parts must be weakly decreasing, got {out[i - 1]} before {part}"
            )
    return out


def parse_partition(text: str) -> Partition:
    """Parse 'a,b,c,...' into a partition; '' or '-' denote the empty one."""
    stripped = text.strip()
    if stripped in ("", "-"):
        return EMPTY
    parts = []
    for token in stripped.split(","):
        token = token.strip()
        try:
            part = int(token)
        except ValueError:
            raise ValueError(f"not an integer part: {token!r}") from None
        parts.append(part)
    return validate_partition(parts)


def format_partition(p: Partition) -> str:
    """Inverse of parse_partition: '4,3,3,1', or '-' for the empty partition."""
    return ",".join(str(part) for part in p) if p else "-"


def size(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    """Transpose the Ferrers diagram (column lengths become parts)."""
    if not p:
        return EMPTY
    return tuple(sum(1 for part in p if part >= j) for j in range(1, p[0] + 1))


def contains_cell(p: Partition, cell: Cell) -> bool:
    i, j = cell
    return 1 <= i <= len(p) and 1 <= j <= p[i - 1]


def hook_length(p: Partition, cell: Cell) -> int:
    """Arm + leg + 1 for a cell of the diagram."""
    if not contains_cell(p, cell):
        raise ValueError(f"cell {cell} outside the diagram of {p}")
    i, j = cell
    arm = p[i - 1] - j
    leg = sum(1 for part in p[i:] if part >= j)
    return arm + leg + 1


def hook_lengths(p: Partition) -> list[int]:
    """Hook lengths of every cell, rows top to bottom."""
    conj = conjugate(p)
    return [
        (p[i] - 1 - j) + (conj[j] - 1 - i) + 1
        for i in range(len(p))
        for j in range(p[i])
    ]


def dimension(p: Partition) -> int:
    """Number of standard Young tableaux of shape `p` (hook length formula)."""
    if not p:
        return 1
    n = sum(p)
    numerator = factorial(n)
    denominator = prod(hook_lengths(p))
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0, f"hook product does not divide {n}! for {p}"
    return quotient


def count_syt_bruteforce(p: Partition) -> int:
    """Count SYT by direct backtracking insertion of 1..n.

    Independent of the hook length formula; serves as its oracle.  Limited to
    |p| <= BRUTE_FORCE_LIMIT.
    """
    n = sum(p)
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"size {n} too large for brute force (limit {BRUTE_FORCE_LIMIT})")
    if not p:
        return 1
    filled = [0] * len(p)

    def place(value: int) -> int:
        if value > n:
            return 1
        total = 0
        for i in range(len(p)):
            # Next number goes at the end of row i; legal iff the row has
            # room and the row above is strictly longer so far.
            if filled[i] < p[i] and (i == 0 or filled[i - 1] > filled[i]):
                filled[i] += 1
                total += place(value + 1)
                filled[i] -= 1
        return total

    return place(1)


def _v2(x: int) -> int:
    """Exponent of 2 in x (x > 0)."""
    return (x & -x).bit_length() - 1


def v2_factorial(n: int) -> int:
    """Exponent of 2 in n!, by Legendre's formula: n minus its binary digit sum."""
    return n - n.bit_count()


def v2_dimension(p: Partition) -> int:
    """Exponent of 2 in the SYT dimension, via hook arithmetic only."""
    n = sum(p)
    return v2_factorial(n) - sum(_v2(h) for h in hook_lengths(p))


def dimension_mod4(p: Partition) -> int:
    """SYT dimension reduced mod 4."""
    return dimension(p) % 4


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic order.

    `max_part` restricts all parts to be at most that value.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    cap = n if max_part is None else min(max_part, n)
    if n == 0:
        yield EMPTY
        return
    for first in range(cap, 0, -1):
        for rest in enumerate_partitions(n - first, first):
            yield (first, *rest)
