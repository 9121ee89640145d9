"""Command-line front end: gen, verify, count, bench.

Exit codes are a stable contract: 0 success, 1 usage or parameter error,
2 verification failure (or count formula/enumeration mismatch).  Data goes
to stdout, diagnostics to stderr, machine-first formatting throughout.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .bitvertex import Params, Vertex
from .hamilton import HamiltonGenerator, generate
from .oracle import (
    DEFAULT_GUARD,
    CountMismatchError,
    count_formula,
    verify_instance,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="stablekneser",
        description=(
            "Stream a Hamilton cycle through the s-stable k-subsets of "
            "{1..n} (disjointness graph), or verify the construction by "
            "brute force at desk scale."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="ground-set size")
        p.add_argument("--k", type=int, required=True, help="subset size")
        p.add_argument("--s", type=int, required=True, help="stability (>= 2)")
        p.add_argument(
            "--p", type=int, default=1, help="pin position for the gluing (default 1)"
        )

    gen = sub.add_parser("gen", parents=[], help="stream the Hamilton cycle")
    instance_args(gen)
    gen.add_argument("--limit", type=int, default=None, help="stop after this many vertices")
    gen.add_argument(
        "--format", choices=("bits", "sets"), default="bits", help="output form per line"
    )
    gen.add_argument("--start", type=str, default=None, help="start vertex as a bitstring")

    verify = sub.add_parser("verify", help="run every structural check on one instance")
    instance_args(verify)

    count = sub.add_parser("count", help="print the vertex count")
    instance_args(count)

    bench = sub.add_parser("bench", help="time the per-vertex cost")
    instance_args(bench)
    bench.add_argument("--steps", type=int, required=True, help="vertices to generate")

    return parser


def cmd_gen(args: argparse.Namespace) -> int:
    params = Params(args.n, args.k, args.s)
    start = Vertex.from_bits(params, args.start) if args.start else None
    try:
        sys.stdout.reconfigure(line_buffering=True)  # so `gen | head` streams
    except AttributeError:  # replaced stdout without reconfigure (tests)
        pass
    try:
        for v in generate(params, p=args.p, limit=args.limit, start=start):
            if args.format == "sets":
                print(",".join(str(e) for e in v.to_set()))
            else:
                print(v.bits())
    except BrokenPipeError:
        # consumer hung up (e.g. `gen | head`); silence the exit-time flush
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    params = Params(args.n, args.k, args.s)
    report = verify_instance(params, p=args.p, guard=DEFAULT_GUARD)
    print(report.to_text())
    return 0 if report.passed else 2


def cmd_count(args: argparse.Namespace) -> int:
    params = Params(args.n, args.k, args.s)
    try:
        value = count_formula(params)
    except CountMismatchError as exc:
        print(f"stablekneser: {exc}", file=sys.stderr)
        return 2
    print(value)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    params = Params(args.n, args.k, args.s)
    if args.steps < 1:
        raise ValueError(f"--steps must be at least 1, got {args.steps}")
    gen = HamiltonGenerator(params, p=args.p)
    step = gen.step
    begin = time.perf_counter_ns()
    for _ in range(args.steps):
        step()
    total = time.perf_counter_ns() - begin
    print(f"steps {args.steps}")
    print(f"total_ns {total}")
    print(f"mean_ns_per_vertex {total / args.steps:.1f}")
    return 0


_COMMANDS = {
    "gen": cmd_gen,
    "verify": cmd_verify,
    "count": cmd_count,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:  # parameter/vertex domain errors
        print(f"stablekneser: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
