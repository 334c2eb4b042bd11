"""Exact 2-core-tower arithmetic for integer partitions.

Computes SYT dimensions, 2-core/2-quotient decompositions, 2-core towers,
and the partition counts a(n), a2(n), m4(n), p(n), together with a
brute-force census oracle that verifies every formula at desk scale.
"""

from .core_quotient import (
    DominoPosition,
    from_core_and_quotient,
    is_two_core,
    removable_dominoes,
    two_core,
    two_core_greedy,
    two_quotient,
)
from .counting import (
    BinarySupport,
    CensusMod4,
    WeightPattern,
    a2,
    a2_sparse,
    binary_digits,
    binary_support,
    count_div4,
    count_odd,
    is_sparse,
    m4,
    nu,
    partition_count,
    pattern_count,
    t_count,
    weight_pattern,
)
from .oracle import VerificationReport, census_mod4, verify_all
from .partitions import (
    EMPTY,
    Partition,
    conjugate,
    count_syt_bruteforce,
    dimension,
    dimension_mod4,
    enumerate_partitions,
    format_partition,
    hook_length,
    parse_partition,
    v2_dimension,
)
from .tower import (
    CoreTower,
    build_tower,
    is_odd_partition_via_tower,
    is_two_mod4_via_tower,
    rebuild_partition,
    row_weights,
)

__version__ = "0.1.0"

__all__ = [
    "BinarySupport",
    "CensusMod4",
    "CoreTower",
    "DominoPosition",
    "EMPTY",
    "Partition",
    "VerificationReport",
    "WeightPattern",
    "a2",
    "a2_sparse",
    "binary_digits",
    "binary_support",
    "build_tower",
    "census_mod4",
    "conjugate",
    "count_div4",
    "count_odd",
    "count_syt_bruteforce",
    "dimension",
    "dimension_mod4",
    "enumerate_partitions",
    "format_partition",
    "from_core_and_quotient",
    "hook_length",
    "is_odd_partition_via_tower",
    "is_sparse",
    "is_two_core",
    "is_two_mod4_via_tower",
    "m4",
    "nu",
    "parse_partition",
    "partition_count",
    "pattern_count",
    "rebuild_partition",
    "removable_dominoes",
    "row_weights",
    "t_count",
    "two_core",
    "two_core_greedy",
    "two_quotient",
    "v2_dimension",
    "verify_all",
    "weight_pattern",
]
