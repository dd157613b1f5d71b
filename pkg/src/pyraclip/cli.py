"""Command-line interface.

Subcommands:
  clip    clip segments from a CSV file with a chosen algorithm
  verify  sweep generated corpora against the exact oracle
  bench   run the timing/operation-count benchmark

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or
input-data error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from ._version import __version__
from .bench import BenchConfig, emit_report, run_benchmark
from .cases import CASES, PRNG_NAME, parse_case_list
from .geometry import Point3, Segment3
from .outcomes import ClipMode
from .pc import clip_pc
from .baselines import clip_cb, clip_cs, clip_lb
from .sweep import sweep_cases

_CLIPPERS = {"pc": clip_pc, "cs": clip_cs, "lb": clip_lb, "cb": clip_cb}

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


class _DataError(Exception):
    """Malformed or out-of-contract input data (exit code 3)."""


def _fmt(x: float) -> str:
    return repr(x)


def _run_clip(args: argparse.Namespace) -> int:
    mode = ClipMode.STRICT if args.mode == "strict" else ClipMode.PRECLIP_Z
    clipper = _CLIPPERS[args.algo]
    out_lines: list[str] = []
    try:
        with open(args.infile, "r", encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                parts = line.split(",")
                if len(parts) != 6:
                    raise _DataError(
                        f"{args.infile}:{lineno}: expected 6 fields, got {len(parts)}"
                    )
                try:
                    xa, ya, za, xb, yb, zb = (float(p) for p in parts)
                    segment = Segment3(Point3(xa, ya, za), Point3(xb, yb, zb))
                    outcome = clipper(segment, mode)
                except (ValueError, OverflowError) as exc:
                    raise _DataError(f"{args.infile}:{lineno}: {exc}") from exc
                prefix = ",".join(_fmt(c) for c in (xa, ya, za, xb, yb, zb))
                if outcome.is_accepted:
                    p1, p2 = outcome.p_enter, outcome.p_exit
                    out_lines.append(
                        prefix
                        + ",accepted,"
                        + ",".join(
                            _fmt(v)
                            for v in (
                                outcome.t_enter,
                                outcome.t_exit,
                                p1.x,
                                p1.y,
                                p1.z,
                                p2.x,
                                p2.y,
                                p2.z,
                            )
                        )
                    )
                else:
                    out_lines.append(prefix + ",rejected,,,,,,,,")
        with open(args.outfile, "w", encoding="utf-8", newline="\n") as handle:
            handle.write("\n".join(out_lines) + ("\n" if out_lines else ""))
    except OSError as exc:
        print(f"error: {exc.filename or args.infile}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except _DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _run_verify(args: argparse.Namespace) -> int:
    try:
        specs = parse_case_list(args.cases)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.n < 1 or args.tol <= 0:
        print("error: need --n >= 1 and --tol > 0", file=sys.stderr)
        return EXIT_USAGE
    print(
        f"# pyraclip verify version={__version__} prng={PRNG_NAME} "
        f"seed={args.seed} n={args.n} tol={args.tol:g} build_flavor=timed",
        file=sys.stderr,
    )
    result = sweep_cases(specs, args.n, args.seed, args.tol)
    for mismatch in result.mismatches:
        print(mismatch.reproducer_csv())
    print(
        f"# checked {result.segments_checked} segments, "
        f"{result.comparisons} comparisons, {len(result.mismatches)} mismatches",
        file=sys.stderr,
    )
    return EXIT_OK if result.ok else EXIT_VERIFY_FAILED


def _run_bench(args: argparse.Namespace) -> int:
    try:
        specs = parse_case_list(args.cases)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.n < 1 or args.reps < 1:
        print("error: need --n >= 1 and --reps >= 1", file=sys.stderr)
        return EXIT_USAGE
    config = BenchConfig(
        cases=tuple(specs),
        n=args.n,
        seed=args.seed,
        reps=args.reps,
        count_n=args.counts,
    )
    report = run_benchmark(config)
    payload = emit_report(report, args.format)
    try:
        with open(args.outfile, "wb") as handle:
            handle.write(payload)
    except OSError as exc:
        print(f"error: {exc.filename or args.outfile}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pyraclip",
        description="Line-segment clipping against the unitary viewing pyramid.",
    )
    parser.add_argument("--version", action="version", version=f"pyraclip {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_clip = sub.add_parser(
        "clip",
        help="clip segments from CSV (columns xA,yA,zA,xB,yB,zB, one per line)",
    )
    p_clip.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p_clip.add_argument("--mode", choices=("strict", "preclip"), default="strict")
    p_clip.add_argument("--algo", choices=tuple(_CLIPPERS), default="pc")
    p_clip.add_argument("--out", dest="outfile", required=True, metavar="FILE")
    p_clip.set_defaults(func=_run_clip)

    p_verify = sub.add_parser(
        "verify", help="verify all four clippers against the exact oracle"
    )
    p_verify.add_argument("--cases", default="all", metavar="all|LIST")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--seed", type=int, required=True)
    p_verify.add_argument("--tol", type=float, default=1e-12)
    p_verify.set_defaults(func=_run_verify)

    p_bench = sub.add_parser("bench", help="run the benchmark harness")
    p_bench.add_argument("--cases", default="all", metavar="all|LIST")
    p_bench.add_argument("--n", type=int, required=True)
    p_bench.add_argument("--seed", type=int, required=True)
    p_bench.add_argument("--reps", type=int, required=True)
    p_bench.add_argument("--format", choices=("csv", "json"), default="csv")
    p_bench.add_argument("--out", dest="outfile", required=True, metavar="FILE")
    p_bench.add_argument(
        "--counts",
        type=int,
        default=20_000,
        help="operation-count subsample per case (0 disables counting)",
    )
    p_bench.set_defaults(func=_run_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
