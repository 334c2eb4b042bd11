"""Command-line surface: dim, core, quotient, tower, count, census, verify.

Exit codes: 0 success, 1 usage or parse error, 2 verification failure.
JSON mode prints exactly one document with a schema_version field; counts
that can exceed 64 bits are emitted as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import counting, oracle
from .partitions import (
    dimension,
    dimension_mod4,
    format_partition,
    parse_partition,
    v2_dimension,
)
from .core_quotient import two_core, two_quotient
from .tower import build_tower, render_tower, row_weights, tower_json_dict

SCHEMA_VERSION = 1

COUNT_SELECTORS = {
    "a": counting.count_odd,
    "a2": counting.a2,
    "m4": counting.m4,
    "p": counting.partition_count,
    "div4": counting.count_div4,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract here is 1.
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, **payload}
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_dim(args: argparse.Namespace) -> int:
    p = parse_partition(args.partition)
    dim = dimension(p)
    v2 = v2_dimension(p)
    mod4 = dimension_mod4(p)
    _emit(
        args,
        f"dimension: {dim}\nv2: {v2}\nmod4: {mod4}",
        {
            "command": "dim",
            "partition": list(p),
            "dimension": str(dim),
            "v2": v2,
            "mod4": mod4,
        },
    )
    return 0


def _cmd_core(args: argparse.Namespace) -> int:
    p = parse_partition(args.partition)
    core = two_core(p)
    _emit(
        args,
        format_partition(core),
        {"command": "core", "partition": list(p), "core": list(core)},
    )
    return 0


def _cmd_quotient(args: argparse.Namespace) -> int:
    p = parse_partition(args.partition)
    q0, q1 = two_quotient(p)
    _emit(
        args,
        f"quotient0: {format_partition(q0)}\nquotient1: {format_partition(q1)}",
        {
            "command": "quotient",
            "partition": list(p),
            "quotient0": list(q0),
            "quotient1": list(q1),
        },
    )
    return 0


def _cmd_tower(args: argparse.Namespace) -> int:
    p = parse_partition(args.partition)
    tower = build_tower(p)
    weights = row_weights(tower)
    weights_text = ",".join(str(w) for w in weights) if weights else "-"
    rendered = render_tower(tower)
    text = (rendered + "\n" if rendered else "") + f"row_weights: {weights_text}"
    _emit(args, text, {"command": "tower", **tower_json_dict(tower)})
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    value = COUNT_SELECTORS[args.selector](args.n)
    _emit(
        args,
        str(value),
        {
            "command": "count",
            "selector": args.selector,
            "n": str(args.n),
            "value": str(value),
        },
    )
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    census = oracle.census_mod4(args.n)
    a0, a1, a2_, a3 = census.counts
    _emit(
        args,
        f"a0={a0} a1={a1} a2={a2_} a3={a3}",
        {
            "command": "census",
            "n": census.n,
            "a0": str(a0),
            "a1": str(a1),
            "a2": str(a2_),
            "a3": str(a3),
        },
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    workers = args.workers if args.workers else (os.cpu_count() or 1)
    report = oracle.verify_all(args.max_n, workers=workers)
    _emit(args, report.render_text(), {"command": "verify", **report.to_json_dict()})
    return 0 if report.all_passed else 2


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coretower", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.set_defaults(handler=handler)
        cmd.add_argument(
            "--format", choices=("text", "json"), default="text", help="output mode"
        )
        return cmd

    dim = add("dim", _cmd_dim, "SYT dimension, its 2-adic valuation, and mod 4")
    dim.add_argument("partition", help="comma-separated parts; '-' for empty")

    core = add("core", _cmd_core, "2-core of a partition")
    core.add_argument("partition", help="comma-separated parts; '-' for empty")

    quotient = add("quotient", _cmd_quotient, "2-quotient pair of a partition")
    quotient.add_argument("partition", help="comma-separated parts; '-' for empty")

    tower = add("tower", _cmd_tower, "2-core tower and its row weights")
    tower.add_argument("partition", help="comma-separated parts; '-' for empty")

    count = add("count", _cmd_count, "a, a2, m4, p, or div4 at n")
    count.add_argument("selector", choices=sorted(COUNT_SELECTORS))
    count.add_argument("n", type=_nonnegative_int)

    census = add("census", _cmd_census, "brute-force census of dimensions mod 4")
    census.add_argument("n", type=_nonnegative_int)

    verify = add("verify", _cmd_verify, "run every consistency check up to --max-n")
    verify.add_argument(
        "--max-n", type=_nonnegative_int, default=oracle.DEFAULT_MAX_N
    )
    verify.add_argument("--workers", type=int, default=0, help="0 means all cores")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"coretower: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
