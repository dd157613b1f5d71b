"""Corpus verification sweep: every clipper against the exact oracle."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bench import ALGORITHMS, TIMED_KERNELS, SegmentTuples
from .cases import CaseSpec, columns_as_tuples, generate_case_columns
from .exact import clip_exact_interval


@dataclass(frozen=True)
class Mismatch:
    case_id: int
    algorithm: str
    segment: tuple[float, float, float, float, float, float]
    detail: str

    def reproducer_csv(self) -> str:
        coords = ",".join(repr(c) for c in self.segment)
        return f"{self.case_id},{self.algorithm},{coords},{self.detail}"


@dataclass
class SweepResult:
    segments_checked: int = 0
    comparisons: int = 0
    mismatches: list[Mismatch] = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.mismatches is None:
            self.mismatches = []

    @property
    def ok(self) -> bool:
        return not self.mismatches


def sweep_segments(
    segments: SegmentTuples,
    tol: float,
    case_id: int = 0,
    algorithms: Sequence[str] = ALGORITHMS,
    result: SweepResult | None = None,
) -> SweepResult:
    """Check each algorithm's verdict and parameters against the oracle."""
    if result is None:
        result = SweepResult()
    kernels = [(name, TIMED_KERNELS[name]) for name in algorithms]
    for seg in segments:
        xa, ya, za, xb, yb, zb = seg
        interval = clip_exact_interval(xa, ya, za, xb, yb, zb)
        if interval is None:
            t_lo = t_hi = None
        else:
            t_lo = float(interval[0])
            t_hi = float(interval[1])
        result.segments_checked += 1
        for name, kernel in kernels:
            result.comparisons += 1
            out = kernel(xa, ya, za, xb, yb, zb)
            if (out is None) != (interval is None):
                result.mismatches.append(
                    Mismatch(
                        case_id,
                        name,
                        seg,
                        "verdict_mismatch:"
                        + ("rejected_vs_accepted" if out is None else "accepted_vs_rejected"),
                    )
                )
                continue
            if out is None:
                continue
            lo, hi = (out[0], out[1]) if out[0] <= out[1] else (out[1], out[0])
            err = max(abs(lo - t_lo), abs(hi - t_hi))
            if err > tol:
                result.mismatches.append(
                    Mismatch(case_id, name, seg, f"parameter_mismatch:err={err:.3e}")
                )
    return result


def sweep_cases(
    cases: Iterable[CaseSpec],
    n: int,
    seed: int,
    tol: float = 1e-12,
    algorithms: Sequence[str] = ALGORITHMS,
) -> SweepResult:
    """Generate each case corpus and sweep it; deterministic given seed."""
    result = SweepResult()
    for spec in cases:
        segments = columns_as_tuples(generate_case_columns(spec, seed, n))
        sweep_segments(segments, tol, spec.case_id, algorithms, result)
        del segments
    return result
