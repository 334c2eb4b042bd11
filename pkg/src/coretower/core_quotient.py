"""2-core and 2-quotient machinery: removable dominoes, the parity labeling,
and reconstruction of a partition from its core and quotient pair.

Two routes are kept deliberately distinct: domino removal and the cell
labeling rule are definitional, while a 2-runner abacus on beta-sets
(first-column hook lengths) provides the fast core map and the
reconstruction.  The two routes are asserted against each other.
"""

from __future__ import annotations

import random
from typing import NamedTuple

from .partitions import EMPTY, Partition, conjugate, validate_partition

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


class DominoPosition(NamedTuple):
    """A removable domino, anchored at its top-left cell (1-based)."""

    row: int
    col: int
    orientation: str


def is_staircase(p: Partition) -> bool:
    """True iff p = (k, k-1, ..., 2, 1) for some k >= 0."""
    k = len(p)
    return all(p[i] == k - i for i in range(k))


def removable_dominoes(p: Partition) -> list[DominoPosition]:
    """All dominoes whose removal leaves a valid partition shape."""
    out = []
    k = len(p)
    for i in range(k):
        below = p[i + 1] if i + 1 < k else 0
        # Horizontal: last two cells of row i+1.
        if p[i] >= 2 and p[i] - 2 >= below:
            out.append(DominoPosition(i + 1, p[i] - 1, HORIZONTAL))
        # Vertical: last cells of two equal consecutive rows.
        if i + 1 < k and p[i] == p[i + 1]:
            next_below = p[i + 2] if i + 2 < k else 0
            if p[i] - 1 >= next_below:
                out.append(DominoPosition(i + 1, p[i], VERTICAL))
    return out


def remove_domino(p: Partition, domino: DominoPosition) -> Partition:
    parts = list(p)
    i = domino.row - 1
    if domino.orientation == HORIZONTAL:
        parts[i] -= 2
    else:
        parts[i] -= 1
        parts[i + 1] -= 1
    return validate_partition([part for part in parts if part > 0])


def two_core_greedy(p: Partition, rng: random.Random | None = None) -> Partition:
    """2-core by successive domino removal (the definition).

    With `rng`, dominoes are removed in a random order; the result is
    independent of the order.
    """
    current = p
    while True:
        dominoes = removable_dominoes(current)
        if not dominoes:
            return current
        choice = rng.choice(dominoes) if rng is not None else dominoes[0]
        current = remove_domino(current, choice)


def is_two_core(p: Partition) -> bool:
    """True iff p has no removable domino; exactly the staircases."""
    staircase = is_staircase(p)
    assert staircase == (not removable_dominoes(p))
    return staircase


def _beta_set(p: Partition, beads: int) -> list[int]:
    """First-column hook lengths with `beads` beads, strictly decreasing."""
    assert beads >= len(p)
    padded = p + (0,) * (beads - len(p))
    return [padded[i] + (beads - 1 - i) for i in range(beads)]


def _partition_from_beta(betas: list[int]) -> Partition:
    """Inverse of _beta_set (betas need not be sorted)."""
    beads = len(betas)
    ordered = sorted(betas, reverse=True)
    parts = [ordered[i] - (beads - 1 - i) for i in range(beads)]
    return tuple(part for part in parts if part > 0)


def _runner_positions(betas: list[int]) -> tuple[list[int], list[int]]:
    """Split beta numbers onto the even/odd runner, as bead positions."""
    evens = sorted((b // 2 for b in betas if b % 2 == 0), reverse=True)
    odds = sorted((b // 2 for b in betas if b % 2 == 1), reverse=True)
    return evens, odds


def _even_bead_count(*ps: Partition) -> int:
    beads = max((len(p) for p in ps), default=0)
    return beads + (beads % 2) if beads else 2


def two_core(p: Partition) -> Partition:
    """2-core of p, via the abacus; asserted against greedy removal."""
    betas = _beta_set(p, _even_bead_count(p))
    evens, odds = _runner_positions(betas)
    # Pushing every bead down on its runner deletes all dominoes at once.
    core_betas = [2 * x for x in range(len(evens))] + [
        2 * x + 1 for x in range(len(odds))
    ]
    core = _partition_from_beta(core_betas)
    assert core == two_core_greedy(p)
    return core


def two_quotient(p: Partition) -> tuple[Partition, Partition]:
    """The quotient pair, by the 0/1 cell labeling.

    Cell (i, j) is labeled with (i + j) mod 2.  The first component collects
    cells whose row ends in 0 and whose column ends in 1; the second the
    cells whose row ends in 1 and whose column ends in 0.
    """
    if not p:
        return EMPTY, EMPTY
    conj = conjugate(p)
    row_end = [(i + p[i - 1]) % 2 for i in range(1, len(p) + 1)]
    col_end = [(conj[j - 1] + j) % 2 for j in range(1, p[0] + 1)]

    def component(row_label: int, col_label: int) -> Partition:
        cols = [j for j in range(1, p[0] + 1) if col_end[j - 1] == col_label]
        parts = []
        for i in range(1, len(p) + 1):
            if row_end[i - 1] != row_label:
                continue
            count = sum(1 for j in cols if j <= p[i - 1])
            if count:
                parts.append(count)
        return validate_partition(parts)

    return component(0, 1), component(1, 0)


def from_core_and_quotient(core: Partition, q0: Partition, q1: Partition) -> Partition:
    """The unique partition with the given 2-core and 2-quotient.

    Inverse of (two_core, two_quotient): the core's beta-set is split onto
    two runners, each quotient component is written onto its runner, and the
    combined beta-set is read back as a partition.
    """
    if not is_staircase(core):
        raise ValueError(f"{core} is not a 2-core")
    beads = _even_bead_count(core, q0, q1)
    while True:
        evens, odds = _runner_positions(_beta_set(core, beads))
        if len(evens) >= len(q0) and len(odds) >= len(q1):
            break
        beads += 2
    # A 2-core with an even bead count has both runners pushed down.
    assert evens == list(range(len(evens) - 1, -1, -1))
    assert odds == list(range(len(odds) - 1, -1, -1))
    betas = [2 * x for x in _beta_set(q0, len(evens))] + [
        2 * x + 1 for x in _beta_set(q1, len(odds))
    ]
    return _partition_from_beta(betas)
