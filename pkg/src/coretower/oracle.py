"""Brute-force ground truth and the verification sweep.

The census enumerates every partition of n and tallies exact dimension
residues mod 4 using hook arithmetic only — never towers or the counting
formulas — so it can serve as an independent oracle for both.  Work is
stratified by largest part; strata are reduced in a fixed order, so output
is identical for any worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .core_quotient import from_core_and_quotient, two_core, two_quotient
from .counting import (
    CensusMod4,
    a2_by_pattern_sum,
    a2_by_recursion,
    a2_sparse,
    count_odd,
    is_sparse,
)
from .partitions import (
    EMPTY,
    Partition,
    dimension_mod4,
    enumerate_partitions,
    format_partition,
    v2_dimension,
)
from .tower import (
    build_tower,
    row_weights,
    weights_equal_binary_digits,
    weights_fit_two_mod4_pattern,
)

DEFAULT_LIMIT = 40
DEFAULT_MAX_N = 25

# Checks evaluated per partition inside the strata.
PARTITION_CHECKS = (
    "tower_odd_criterion",
    "tower_two_mod4_criterion",
    "core_quotient_roundtrip",
    "quotient_size_identity",
    "tower_weight_size_identity",
    "valuation_identity",
)
# Checks evaluated per n against the reduced census.
CENSUS_CHECKS = (
    "a2_census_vs_recursion_vs_pattern_sum",
    "odd_count_vs_exponent_formula",
    "sparse_closed_form",
)
CHECK_NAMES = CENSUS_CHECKS[:2] + PARTITION_CHECKS + CENSUS_CHECKS[2:]

CensusHook = Callable[[int, CensusMod4], CensusMod4]


@dataclass
class CheckResult:
    name: str
    passed: bool
    counterexample: str | None
    seconds: float


@dataclass
class VerificationReport:
    n_max: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def render_text(self) -> str:
        """One line per check: name, range, PASS/FAIL, counterexample."""
        lines = []
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"{check.name} n=0..{self.n_max} {status}"
            if check.counterexample is not None:
                line += f" counterexample: {check.counterexample}"
            lines.append(line)
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "all_passed": self.all_passed,
            "checks": [
                {
                    "name": check.name,
                    "passed": check.passed,
                    "counterexample": check.counterexample,
                    "seconds": check.seconds,
                }
                for check in self.checks
            ],
        }


def _stratum_keys(n: int) -> list[int]:
    """Largest-part stratum keys, in global reverse-lex order."""
    return [0] if n == 0 else list(range(n, 0, -1))


def _stratum_partitions(n: int, key: int) -> Iterator[Partition]:
    """Partitions of n with largest part exactly `key`."""
    if n == 0:
        yield EMPTY
        return
    for rest in enumerate_partitions(n - key, key):
        yield (key, *rest)


def _census_stratum(unit: tuple[int, int]) -> tuple[int, int, int, int]:
    n, key = unit
    counts = [0, 0, 0, 0]
    for p in _stratum_partitions(n, key):
        counts[dimension_mod4(p)] += 1
    return tuple(counts)


def _check_limit(n: int, limit: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > limit:
        raise ValueError(f"n={n} exceeds the configured limit {limit}")


def census_mod4(n: int, workers: int = 1, limit: int = DEFAULT_LIMIT) -> CensusMod4:
    """Tally dimension residues mod 4 over all partitions of n."""
    _check_limit(n, limit)
    units = [(n, key) for key in _stratum_keys(n)]
    if workers <= 1:
        tallies = [_census_stratum(unit) for unit in units]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            tallies = list(pool.map(_census_stratum, units, chunksize=4))
    counts = tuple(sum(t[i] for t in tallies) for i in range(4))
    return CensusMod4(n, counts)


def _verify_stratum(
    unit: tuple[int, int],
) -> tuple[tuple[int, int, int, int], dict[str, str], dict[str, float]]:
    """Census tally plus first counterexample and elapsed time per check."""
    n, key = unit
    counts = [0, 0, 0, 0]
    firsts: dict[str, str] = {}
    seconds: dict[str, float] = {name: 0.0 for name in PARTITION_CHECKS}

    def run(name: str, predicate: Callable[[], bool], p: Partition) -> None:
        start = time.perf_counter()
        ok = predicate()
        seconds[name] += time.perf_counter() - start
        if not ok and name not in firsts:
            firsts[name] = f"n={n}, partition={format_partition(p)}"

    for p in _stratum_partitions(n, key):
        counts[dimension_mod4(p)] += 1
        v2 = v2_dimension(p)
        weights = row_weights(build_tower(p))
        core = two_core(p)
        q0, q1 = two_quotient(p)
        run(
            "tower_odd_criterion",
            lambda: weights_equal_binary_digits(weights, n) == (v2 == 0),
            p,
        )
        run(
            "tower_two_mod4_criterion",
            lambda: weights_fit_two_mod4_pattern(weights, n) == (v2 == 1),
            p,
        )
        run(
            "core_quotient_roundtrip",
            lambda: from_core_and_quotient(core, q0, q1) == p,
            p,
        )
        run(
            "quotient_size_identity",
            lambda: n == 2 * (sum(q0) + sum(q1)) + sum(core),
            p,
        )
        run(
            "tower_weight_size_identity",
            lambda: sum(w << r for r, w in enumerate(weights)) == n,
            p,
        )
        run(
            "valuation_identity",
            lambda: sum(weights) - n.bit_count() == v2,
            p,
        )
    return tuple(counts), firsts, seconds


def verify_all(
    n_max: int = DEFAULT_MAX_N,
    workers: int = 1,
    limit: int = DEFAULT_LIMIT,
    census_hook: CensusHook | None = None,
) -> VerificationReport:
    """Run every consistency check for all n <= n_max.

    Failures become report entries with the first counterexample, never
    exceptions.  `census_hook` transforms each reduced census before the
    formula comparisons run (a fault-injection hook for testing the harness
    itself).  Output is deterministic and independent of `workers`.
    """
    _check_limit(n_max, limit)
    units = [(n, key) for n in range(n_max + 1) for key in _stratum_keys(n)]
    if workers <= 1:
        results = [_verify_stratum(unit) for unit in units]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_stratum, units, chunksize=4))

    firsts: dict[str, str] = {}
    seconds: dict[str, float] = {name: 0.0 for name in CHECK_NAMES}
    by_n: dict[int, list[int]] = {}
    for (n, _key), (tally, stratum_firsts, stratum_seconds) in zip(units, results):
        acc = by_n.setdefault(n, [0, 0, 0, 0])
        for i in range(4):
            acc[i] += tally[i]
        for name, example in stratum_firsts.items():
            firsts.setdefault(name, example)
        for name, elapsed in stratum_seconds.items():
            seconds[name] += elapsed

    def census_check(name: str, n: int, predicate: Callable[[], bool]) -> None:
        start = time.perf_counter()
        ok = predicate()
        seconds[name] += time.perf_counter() - start
        if not ok and name not in firsts:
            firsts[name] = f"n={n}"

    for n in range(n_max + 1):
        census = CensusMod4(n, tuple(by_n[n]))
        if census_hook is not None:
            census = census_hook(n, census)
        counts = census.counts
        census_check(
            "a2_census_vs_recursion_vs_pattern_sum",
            n,
            lambda: counts[2] == a2_by_recursion(n) == a2_by_pattern_sum(n),
        )
        census_check(
            "odd_count_vs_exponent_formula",
            n,
            lambda: counts[1] + counts[3] == count_odd(n),
        )
        census_check(
            "sparse_closed_form",
            n,
            lambda: n == 0 or not is_sparse(n) or a2_sparse(n) == counts[2],
        )

    report = VerificationReport(n_max=n_max)
    for name in CHECK_NAMES:
        report.checks.append(
            CheckResult(
                name=name,
                passed=name not in firsts,
                counterexample=firsts.get(name),
                seconds=seconds[name],
            )
        )
    return report
