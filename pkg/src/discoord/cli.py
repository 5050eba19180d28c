"""``discoord`` command line.

Exit codes: 0 success, 2 invalid input, 3 a phase ran out of rounds.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import DEFAULT_MAX_ROUNDS, DEFAULT_TOLERANCE, ConvergenceConfig
from .errors import DiscoordError
from .report import emit_flow_dot, format_report, solve, trace_csv
from .scenario import load_scenario, validate

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_CONVERGED = 3


def _positive_float(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="discoord", description="Distributed energy generation and distribution.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a scenario file and print its demand regime")
    p.add_argument("file")

    p = sub.add_parser("run", help="generate, then distribute, and print a report")
    p.add_argument("file")
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOLERANCE)
    p.add_argument("--max-rounds", type=_positive_int, default=DEFAULT_MAX_ROUNDS)
    p.add_argument("--trace", metavar="CSV", help="write sampled iteration states here")
    p.add_argument("--trace-every", type=_positive_int, default=1, help="trace sample interval (default 1)")
    p.add_argument("--dot", metavar="DOT", help="write the flow diagram as graphviz DOT here")
    return parser


def _load(path):
    try:
        return load_scenario(path)
    except OSError as exc:
        raise DiscoordError(exc.strerror or str(exc)) from None
    except UnicodeDecodeError as exc:
        raise DiscoordError(f"not UTF-8 text ({exc.reason})") from None


def cmd_validate(args) -> int:
    regime = validate(_load(args.file))
    print(str(regime))
    return EXIT_OK


def cmd_run(args) -> int:
    scenario = _load(args.file)
    cfg = ConvergenceConfig(
        tolerance=args.tol,
        max_rounds=args.max_rounds,
        trace_every=args.trace_every if args.trace else None,
    )
    sol = solve(scenario, cfg)
    report = sol.report()
    sys.stdout.write(format_report(report))
    if args.trace:
        Path(args.trace).write_text(trace_csv(sol), encoding="utf-8")
    if args.dot:
        Path(args.dot).write_text(emit_flow_dot(report), encoding="utf-8")
    if not report.all_converged:
        print("error: iteration limit reached before convergence", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"validate": cmd_validate, "run": cmd_run}[args.command]
    try:
        return handler(args)
    except DiscoordError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
