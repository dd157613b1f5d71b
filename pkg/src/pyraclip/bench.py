"""Timing and operation-count harness.

Timing discipline: segments are pregenerated and resident as plain
float tuples, the timed region is a bare single-threaded loop over one
kernel, and the reported wall time is the minimum over repetitions
after a full warmup pass.  The warmup pass doubles as the checksum
pass: a digest of every output is accumulated and emitted in the
report, which both documents that the work really ran and pins
cross-repetition determinism.  CPython executes the loop body
regardless of whether results are consumed, so the timed repetitions
discard them.

Operation counts come from the instrumented-scalar build of each
kernel (the reference tree for the pyramidal clipper, whose outputs
the test suite pins to the timed build), never from the timed one, and
are averaged over a deterministic leading subsample of each corpus.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from ._version import __version__ as _version
from .baselines import cb_clip, cs_clip, lb_clip
from .cases import CASES, PRNG_NAME, CaseSpec, columns_as_tuples, generate_case_columns
from .counting import CountedFloat, OpCounts, _COUNTER
from .pc import pc_clip, pc_clip_reference

ALGORITHMS = ("pc", "cs", "lb", "cb")

TIMED_KERNELS: dict[str, Callable] = {
    "pc": pc_clip,
    "cs": cs_clip,
    "lb": lb_clip,
    "cb": cb_clip,
}

COUNTING_KERNELS: dict[str, Callable] = {
    "pc": pc_clip_reference,
    "cs": cs_clip,
    "lb": lb_clip,
    "cb": cb_clip,
}

SegmentTuples = Sequence[tuple[float, float, float, float, float, float]]


@dataclass(frozen=True)
class TimingResult:
    wall_seconds: float
    segments_per_second: float
    reps: int
    checksum: float
    flagged: bool = False  # empty input: no work timed


def checksum_pass(kernel: Callable, segments: SegmentTuples) -> float:
    """Run the kernel over the corpus once, digesting every output."""
    acc = 0.0
    rejected = 0
    for xa, ya, za, xb, yb, zb in segments:
        out = kernel(xa, ya, za, xb, yb, zb)
        if out is None:
            rejected += 1
        else:
            acc += out[0] + out[1]
    return acc + float(rejected)


def _timed_pass(kernel: Callable, segments: SegmentTuples) -> float:
    start = time.perf_counter()
    for xa, ya, za, xb, yb, zb in segments:
        kernel(xa, ya, za, xb, yb, zb)
    return time.perf_counter() - start


def time_algorithm(
    algorithm: str, segments: SegmentTuples, reps: int = 2
) -> TimingResult:
    """Minimum-of-reps wall time of one kernel over a resident corpus."""
    if reps < 1:
        raise ValueError("need at least one repetition")
    kernel = TIMED_KERNELS[algorithm]
    if not segments:
        return TimingResult(0.0, 0.0, reps, 0.0, flagged=True)
    checksum = checksum_pass(kernel, segments)  # also the warmup
    best = min(_timed_pass(kernel, segments) for _ in range(reps))
    rate = len(segments) / best if best > 0.0 else 0.0
    return TimingResult(best, rate, reps, checksum, flagged=False)


def count_ops_batch(algorithm: str, segments: SegmentTuples) -> OpCounts:
    """Total operation counts of the counting build over a corpus."""
    kernel = COUNTING_KERNELS[algorithm]
    _COUNTER.reset()
    for xa, ya, za, xb, yb, zb in segments:
        kernel(
            CountedFloat(xa),
            CountedFloat(ya),
            CountedFloat(za),
            CountedFloat(xb),
            CountedFloat(yb),
            CountedFloat(zb),
        )
    return _COUNTER.snapshot()


@dataclass(frozen=True)
class BenchRow:
    case_id: int
    case_name: str
    algorithm: str
    n: int
    wall_seconds: float
    segments_per_second: float
    mean_comparisons: float
    mean_additions: float
    mean_multiplications: float
    mean_divisions: float
    checksum: float
    flagged: bool


@dataclass(frozen=True)
class BenchConfig:
    cases: tuple[CaseSpec, ...] = CASES
    n: int = 10_000
    seed: int = 20_260_810
    reps: int = 2
    count_n: int = 20_000  # ops subsample per case; 0 disables counting


@dataclass
class BenchReport:
    meta: dict = field(default_factory=dict)
    rows: list[BenchRow] = field(default_factory=list)
    # case_id -> {"v1": T_cs/T_pc, "v2": T_lb/T_pc, "v3": T_cb/T_pc}
    coefficients: dict[int, dict[str, float]] = field(default_factory=dict)

    def rows_for(self, case_id: int) -> list[BenchRow]:
        return [r for r in self.rows if r.case_id == case_id]


def run_benchmark(config: BenchConfig) -> BenchReport:
    """Cross product of cases x algorithms: timings, counts, coefficients."""
    report = BenchReport(
        meta={
            "tool": "pyraclip",
            "version": _version,
            "prng": PRNG_NAME,
            "seed": config.seed,
            "n": config.n,
            "reps": config.reps,
            "count_n": config.count_n,
            "build_flavor": "timed+counting" if config.count_n > 0 else "timed",
        }
    )
    for spec in config.cases:
        segments = columns_as_tuples(generate_case_columns(spec, config.seed, config.n))
        count_slice = segments[: config.count_n] if config.count_n > 0 else []
        times: dict[str, float] = {}
        for algorithm in ALGORITHMS:
            timing = time_algorithm(algorithm, segments, config.reps)
            times[algorithm] = timing.wall_seconds
            if count_slice:
                totals = count_ops_batch(algorithm, count_slice)
                m = len(count_slice)
                means = (
                    totals.comparisons / m,
                    totals.additions / m,
                    totals.multiplications / m,
                    totals.divisions / m,
                )
            else:
                means = (0.0, 0.0, 0.0, 0.0)
            report.rows.append(
                BenchRow(
                    spec.case_id,
                    spec.name,
                    algorithm,
                    len(segments),
                    timing.wall_seconds,
                    timing.segments_per_second,
                    *means,
                    timing.checksum,
                    timing.flagged,
                )
            )
        t_pc = times["pc"]
        if t_pc > 0.0:
            report.coefficients[spec.case_id] = {
                "v1": times["cs"] / t_pc,
                "v2": times["lb"] / t_pc,
                "v3": times["cb"] / t_pc,
            }
        else:
            report.coefficients[spec.case_id] = {"v1": 0.0, "v2": 0.0, "v3": 0.0}
        del segments
    return report


_CSV_COLUMNS = (
    "case_id",
    "algorithm",
    "wall_seconds",
    "segs_per_sec",
    "cmp",
    "add",
    "mul",
    "div",
    "v1",
    "v2",
    "v3",
    "checksum",
)


def emit_report(report: BenchReport, fmt: str) -> bytes:
    """Serialize a report as CSV or JSON (UTF-8 bytes, byte-stable)."""
    if fmt == "csv":
        lines = [
            "# pyraclip benchmark report",
            "# "
            + " ".join(f"{key}={value}" for key, value in sorted(report.meta.items())),
            ",".join(_CSV_COLUMNS),
        ]
        for row in report.rows:
            coeff = report.coefficients[row.case_id]
            lines.append(
                ",".join(
                    (
                        str(row.case_id),
                        row.algorithm,
                        repr(row.wall_seconds),
                        repr(row.segments_per_second),
                        repr(row.mean_comparisons),
                        repr(row.mean_additions),
                        repr(row.mean_multiplications),
                        repr(row.mean_divisions),
                        repr(coeff["v1"]),
                        repr(coeff["v2"]),
                        repr(coeff["v3"]),
                        repr(row.checksum) + ("!flagged" if row.flagged else ""),
                    )
                )
            )
        return ("\n".join(lines) + "\n").encode()
    if fmt == "json":
        payload = {
            "meta": report.meta,
            "rows": [
                {
                    "case_id": row.case_id,
                    "case_name": row.case_name,
                    "algorithm": row.algorithm,
                    "n": row.n,
                    "wall_seconds": row.wall_seconds,
                    "segs_per_sec": row.segments_per_second,
                    "cmp": row.mean_comparisons,
                    "add": row.mean_additions,
                    "mul": row.mean_multiplications,
                    "div": row.mean_divisions,
                    "checksum": row.checksum,
                    "flagged": row.flagged,
                }
                for row in report.rows
            ],
            "coefficients": {
                str(case_id): coeff for case_id, coeff in report.coefficients.items()
            },
        }
        return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")
