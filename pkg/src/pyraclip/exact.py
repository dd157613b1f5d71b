"""Exact-arithmetic reference clipper.

Clips by directly intersecting [0, 1] with the half-line constraint
sets f(a) + t*f(d) >= 0 of the four face functionals, entirely in
rational arithmetic.  No case analysis is shared with the fast
clippers, so the two cannot fail the same way; this module is the
ground truth for every property test and frozen expected value.

Every double is a dyadic rational, so converting coordinates with
``Fraction(float)`` is exact and the computed interval is exact.
Not built for speed; excluded from all timing runs.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import Segment3
from .outcomes import ClipMode, ClipOutcome, Verdict

# Arbitrary-precision rational with canonical form (gcd 1, positive
# denominator), courtesy of the standard library.
Rational = Fraction


@dataclass(frozen=True)
class ExactOutcome:
    kind: Verdict
    t_enter: Optional[Fraction] = None
    t_exit: Optional[Fraction] = None

    @property
    def is_accepted(self) -> bool:
        return self.kind is Verdict.ACCEPTED

    @property
    def width(self) -> Optional[Fraction]:
        if self.kind is Verdict.REJECTED:
            return None
        return self.t_exit - self.t_enter


class VerificationVerdict(enum.Enum):
    MATCH = "match"
    VERDICT_MISMATCH = "verdict_mismatch"
    PARAMETER_MISMATCH = "parameter_mismatch"


_REJECTED = ExactOutcome(Verdict.REJECTED)


def _to_fraction(value: float, label: str) -> Fraction:
    if not math.isfinite(value):
        raise ValueError(f"non-finite coordinate {label}={value}")
    return Fraction(value)


def clip_exact_interval(
    xa: float,
    ya: float,
    za: float,
    xb: float,
    yb: float,
    zb: float,
    preclip_z: bool = False,
) -> Optional[tuple[Fraction, Fraction]]:
    """Exact interval from raw coordinates: (lo, hi) or None.

    Fast path used by verification sweeps; see :func:`clip_exact` for
    the full contract.
    """
    fxa = Fraction(xa)
    fya = Fraction(ya)
    fza = Fraction(za)
    fxb = Fraction(xb)
    fyb = Fraction(yb)
    fzb = Fraction(zb)

    constraints = [
        (fxa + fza, (fxb + fzb) - (fxa + fza)),  # right
        (fza - fxa, (fzb - fxb) - (fza - fxa)),  # left
        (fya + fza, (fyb + fzb) - (fya + fza)),  # bottom
        (fza - fya, (fzb - fyb) - (fza - fya)),  # top
    ]
    if preclip_z:
        constraints.append((fza, fzb - fza))

    if xa == xb and ya == yb and za == zb:
        # Degenerate segment: a single point, visible iff inside.
        if all(fa >= 0 for fa, _ in constraints):
            zero = Fraction(0)
            return (zero, zero)
        return None

    lo = Fraction(0)
    hi = Fraction(1)
    for fa, fd in constraints:
        if fd == 0:
            if fa < 0:
                return None
            continue
        crossing = Fraction(-fa, fd)
        if fd > 0:
            if crossing > lo:
                lo = crossing
        else:
            if crossing < hi:
                hi = crossing
        if lo > hi:
            return None
    return (lo, hi)


def clip_exact(segment: Segment3, mode: ClipMode = ClipMode.STRICT) -> ExactOutcome:
    """Exact parametric interval of the segment inside the pyramid.

    STRICT mode requires both endpoint z >= 0; PRECLIP_Z adds z >= 0 as
    a fifth interval constraint instead.  Degenerate segments (a == b)
    report [0, 0] when the point is inside, else rejection.
    """
    for label, value in zip(
        ("xa", "ya", "za", "xb", "yb", "zb"), segment.as_tuple()
    ):
        _to_fraction(value, label)
    if mode is ClipMode.STRICT and (segment.a.z < 0 or segment.b.z < 0):
        raise ValueError("strict mode requires endpoints with z >= 0")
    interval = clip_exact_interval(
        *segment.as_tuple(), preclip_z=(mode is ClipMode.PRECLIP_Z)
    )
    if interval is None:
        return _REJECTED
    return ExactOutcome(Verdict.ACCEPTED, interval[0], interval[1])


def verify(
    segment: Segment3,
    approx: ClipOutcome,
    tol: float,
    mode: ClipMode = ClipMode.STRICT,
) -> tuple[VerificationVerdict, str]:
    """Compare an approximate outcome against the exact interval.

    Returns MATCH when the verdicts agree and, for accepted segments,
    both parameters are within ``tol`` of the exact values (rational
    converted to nearest double).  The second element is a human-readable
    detail string for mismatches, empty on match.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    exact = clip_exact(segment, mode)
    if exact.is_accepted != approx.is_accepted:
        return (
            VerificationVerdict.VERDICT_MISMATCH,
            f"exact={exact.kind.value} approx={approx.kind.value}",
        )
    if not exact.is_accepted:
        return (VerificationVerdict.MATCH, "")
    err_enter = abs(approx.t_enter - float(exact.t_enter))
    err_exit = abs(approx.t_exit - float(exact.t_exit))
    if err_enter > tol or err_exit > tol:
        return (
            VerificationVerdict.PARAMETER_MISMATCH,
            f"enter err={err_enter:.3e} exit err={err_exit:.3e} tol={tol:.1e}",
        )
    return (VerificationVerdict.MATCH, "")
