"""2-core towers: the labeled binary tree of cores of iterated quotients.

Node b (a binary string, "" at the root) is labeled with the 2-core of the
iterated quotient selected by b.  Row r holds 2^r nodes; w_r is the total
size of the labels in row r.  These row weights encode the exponent of 2 in
the SYT dimension, which gives fast membership tests for dimension odd and
dimension 2 mod 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core_quotient import from_core_and_quotient, two_core, two_quotient
from .counting import binary_digits, binary_support
from .partitions import EMPTY, Partition, format_partition


def _node_key(row: int, index: int) -> str:
    return format(index, f"0{row}b") if row else ""


@dataclass(frozen=True)
class CoreTower:
    """Finite part of the tower: only non-empty labels are stored.

    `depth` is the first row at which every iterated quotient (not merely
    every label) is empty; rows 0 .. depth-1 are rendered explicitly.
    """

    n: int
    depth: int
    nodes: dict[str, Partition]

    def label(self, key: str) -> Partition:
        return self.nodes.get(key, EMPTY)


def build_tower(p: Partition) -> CoreTower:
    """Construct the tower by breadth-first iterated quotients."""
    nodes: dict[str, Partition] = {}
    level: list[Partition] = [p]
    row = 0
    while any(level):
        for index, q in enumerate(level):
            core = two_core(q)
            if core:
                nodes[_node_key(row, index)] = core
        level = [part for q in level for part in two_quotient(q)]
        row += 1
    return CoreTower(n=sum(p), depth=row, nodes=nodes)


def row_weights(tower: CoreTower) -> tuple[int, ...]:
    """Total label size per row, one entry per row below `depth`."""
    weights = [0] * tower.depth
    for key, label in tower.nodes.items():
        weights[len(key)] += sum(label)
    while weights and weights[-1] == 0:
        weights.pop()
    return tuple(weights)


def rebuild_partition(tower: CoreTower) -> Partition:
    """Invert build_tower by folding cores and quotients bottom-up."""
    level = [EMPTY] * (1 << tower.depth)
    for row in range(tower.depth - 1, -1, -1):
        level = [
            from_core_and_quotient(
                tower.label(_node_key(row, index)), level[2 * index], level[2 * index + 1]
            )
            for index in range(1 << row)
        ]
    return level[0]


def _weight_at(weights: tuple[int, ...], i: int) -> int:
    return weights[i] if i < len(weights) else 0


def weights_equal_binary_digits(weights: tuple[int, ...], n: int) -> bool:
    """True iff w_i equals the binary digit b_i of n for every row i."""
    digits = binary_digits(n)
    span = max(len(weights), len(digits))
    return all(
        _weight_at(weights, i) == _weight_at(digits, i) for i in range(span)
    )


def weights_fit_two_mod4_pattern(weights: tuple[int, ...], n: int) -> bool:
    """True iff for some nonzero binary exponent R of n the weights are the
    digits of n except w_{R-1} = b_{R-1} + 2 and w_R = 0."""
    digits = binary_digits(n)
    span = max(len(weights), len(digits))
    for shift in sorted(binary_support(n).support_prime):
        if _weight_at(weights, shift) != 0:
            continue
        if _weight_at(weights, shift - 1) != _weight_at(digits, shift - 1) + 2:
            continue
        if all(
            _weight_at(weights, i) == _weight_at(digits, i)
            for i in range(span)
            if i not in (shift, shift - 1)
        ):
            return True
    return False


def is_odd_partition_via_tower(p: Partition) -> bool:
    """Tower criterion for odd SYT dimension."""
    return weights_equal_binary_digits(row_weights(build_tower(p)), sum(p))


def is_two_mod4_via_tower(p: Partition) -> bool:
    """Tower criterion for SYT dimension congruent to 2 mod 4."""
    return weights_fit_two_mod4_pattern(row_weights(build_tower(p)), sum(p))


def tower_json_dict(tower: CoreTower) -> dict:
    """JSON form: every node below `depth` appears, empty labels as []."""
    nodes = {}
    for row in range(tower.depth):
        for index in range(1 << row):
            key = _node_key(row, index)
            nodes[key] = list(tower.label(key))
    return {
        "n": tower.n,
        "depth": tower.depth,
        "nodes": nodes,
        "row_weights": list(row_weights(tower)),
    }


def render_tower(tower: CoreTower) -> str:
    """ASCII form: one row per line, labels left to right, '-' for empty."""
    lines = []
    for row in range(tower.depth):
        labels = (
            format_partition(tower.label(_node_key(row, index)))
            for index in range(1 << row)
        )
        lines.append(" ".join(labels))
    return "\n".join(lines)
