"""Shared result types for all clippers."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .geometry import Point3, Segment3, eval_segment


class ClipMode(enum.Enum):
    """Input contract for endpoints below the z=0 plane.

    STRICT     -- endpoints with z < 0 are a domain error (ValueError).
    PRECLIP_Z  -- the segment is first intersected with the half-space
                  z >= 0 and the clipper runs on the remainder; an empty
                  remainder rejects the segment.
    """

    STRICT = "strict"
    PRECLIP_Z = "preclip"


class Verdict(enum.Enum):
    REJECTED = "rejected"
    ACCEPTED = "accepted"


@dataclass(frozen=True)
class ClipOutcome:
    """Result of clipping a segment against the pyramid.

    Accepted outcomes carry the parametric interval [t_enter, t_exit]
    along P(t) = a + t*(b - a), with 0 <= t_enter <= t_exit <= 1, and the
    evaluated endpoints.  A fully visible segment is exactly an accepted
    outcome with t_enter = 0 and t_exit = 1.
    """

    kind: Verdict
    t_enter: Optional[float] = None
    t_exit: Optional[float] = None
    p_enter: Optional[Point3] = None
    p_exit: Optional[Point3] = None

    @property
    def is_accepted(self) -> bool:
        return self.kind is Verdict.ACCEPTED

    @property
    def is_fully_visible(self) -> bool:
        return self.kind is Verdict.ACCEPTED and self.t_enter == 0.0 and self.t_exit == 1.0

    @staticmethod
    def rejected() -> "ClipOutcome":
        return ClipOutcome(Verdict.REJECTED)

    @staticmethod
    def accepted(segment: Segment3, t1: float, t2: float) -> "ClipOutcome":
        lo, hi = (t1, t2) if t1 <= t2 else (t2, t1)
        return ClipOutcome(
            Verdict.ACCEPTED,
            t_enter=lo,
            t_exit=hi,
            p_enter=eval_segment(segment, lo),
            p_exit=eval_segment(segment, hi),
        )
