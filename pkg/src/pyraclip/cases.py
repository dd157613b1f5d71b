"""Seeded segment generators for the 21 benchmark cases.

Each case constrains the region of endpoint A and of endpoint B (and
sometimes the side of a separating plane), exercising every branch of
the pyramidal clipper's case tree at least once.  Coordinates are drawn
uniformly on a dyadic grid: z first, then x and y conditionally on z,
each uniform over the admissible integer range of the region, divided
by the grid scale.  All coordinates are therefore exact dyadic doubles
in [-8, 8] with z in (0, 8], every functional sum and every plane-side
determinant of generated points is exact in double precision, and a
stream is fully determined by (case, seed).

The PRNG is numpy's PCG64, seeded per case via
``SeedSequence((seed, case_id))``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

import numpy as np

from .geometry import (
    BOTTOM_EDGE,
    BOTTOM_LEFT_CORNER,
    BOTTOM_RIGHT_CORNER,
    INSIDE,
    LEFT_EDGE,
    RIGHT_EDGE,
    Region,
    Segment3,
    TOP_EDGE,
    TOP_LEFT_CORNER,
    TOP_RIGHT_CORNER,
    Point3,
    XClass,
    YClass,
)

PRNG_NAME = "PCG64"


class OutcomeClass(enum.Enum):
    VISIBLE = "visible"
    REJECTED = "rejected"
    PARTIALLY_VISIBLE = "partially_visible"
    MIXED = "mixed"


@dataclass(frozen=True)
class CaseSpec:
    """Constraints for one benchmark case.

    ``regions_a``/``regions_b`` list the admissible regions for each
    endpoint (a draw picks one uniformly, then samples inside it);
    ``constraint`` names an extra predicate from :data:`CONSTRAINTS`
    applied by rejection sampling.  ``grid_bits`` sets the dyadic grid
    resolution 2**-grid_bits.
    """

    case_id: int
    name: str
    regions_a: tuple[Region, ...]
    regions_b: tuple[Region, ...]
    expected: OutcomeClass
    constraint: Optional[str] = None
    grid_bits: int = 10


Columns = tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def _functionals(x, y, z):
    return x + z, z - x, y + z, z - y  # right, left, bottom, top


def _det(fa, ga, fd, gd):
    return fa * gd - ga * fd


def _edge_dets(cols: Columns) -> dict[str, np.ndarray]:
    """Plane-side determinants of the four A-edge planes, vectorized."""
    xa, ya, za, xb, yb, zb = cols
    ra, la, ba, ta = _functionals(xa, ya, za)
    rb, lb_, bb, tb = _functionals(xb, yb, zb)
    rd, ld, bd, td = rb - ra, lb_ - la, bb - ba, tb - ta
    return {
        "top_left": _det(la, ta, ld, td),          # pair (left, top)
        "top_right": _det(ra, ta, rd, td),         # pair (right, top)
        "bottom_right": _det(ra, ba, rd, bd),      # pair (right, bottom)
        "bottom_left": _det(la, ba, ld, bd),       # pair (left, bottom)
    }


def _interval(cols: Columns) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized parametric clipping: (feasible mask, interval width)."""
    xa, ya, za, xb, yb, zb = cols
    fas = _functionals(xa, ya, za)
    fbs = _functionals(xb, yb, zb)
    t0 = np.zeros_like(xa)
    t1 = np.ones_like(xa)
    feasible = np.ones(xa.shape, dtype=bool)
    for fa, fb in zip(fas, fbs):
        feasible &= ~((fa < 0.0) & (fb < 0.0))
        den = fa - fb
        safe = np.where(den == 0.0, 1.0, den)
        t = fa / safe
        t0 = np.where((fa < 0.0) & (fb >= 0.0), np.maximum(t0, t), t0)
        t1 = np.where((fa >= 0.0) & (fb < 0.0), np.minimum(t1, t), t1)
    feasible &= t0 <= t1
    return feasible, t1 - t0


# Extra per-draw predicates, applied by rejection sampling.  Plane-side
# determinants of grid coordinates are exact in double precision, so
# the strict-sign and nonzero tests below are exact too.
# Exact separating-plane ties (determinant zero) put the segment on the
# accept/reject knife edge where the visible part is a single point;
# they are excluded from the random corpora and covered by dedicated
# unit tests instead.
CONSTRAINTS: dict[str, Callable[[Columns], np.ndarray]] = {
    # Segment passes on the outside of the plane through A and the
    # top-left edge (left crossing strictly precedes top crossing).
    "far_side_separating": lambda cols: _edge_dets(cols)["top_left"] < 0.0,
    # Segment strictly crosses that plane's accept side.
    "far_side_crossing": lambda cols: _edge_dets(cols)["top_left"] > 0.0,
    "no_tie_bottom_right": lambda cols: _edge_dets(cols)["bottom_right"] != 0.0,
    "no_tie_top_right": lambda cols: _edge_dets(cols)["top_right"] != 0.0,
    "no_tie_bottom_right_top_left": lambda cols: (
        (_edge_dets(cols)["bottom_right"] != 0.0)
        & (_edge_dets(cols)["top_left"] != 0.0)
    ),
    # Segment has a crossing of genuine parametric width through the
    # pyramid (filters out misses and knife-edge grazes).
    "crossing_interior": lambda cols: _interval(cols)[0]
    & (_interval(cols)[1] > 2.0**-20),
}


CASES: tuple[CaseSpec, ...] = (
    CaseSpec(1, "visible_inside", (INSIDE,), (INSIDE,), OutcomeClass.VISIBLE),
    CaseSpec(2, "reject_both_above_top", (TOP_EDGE,), (TOP_EDGE,), OutcomeClass.REJECTED),
    CaseSpec(
        3, "reject_both_below_bottom", (BOTTOM_EDGE,), (BOTTOM_EDGE,), OutcomeClass.REJECTED
    ),
    CaseSpec(
        4,
        "reject_corner_pair_below",
        (BOTTOM_RIGHT_CORNER,),
        (BOTTOM_LEFT_CORNER,),
        OutcomeClass.REJECTED,
    ),
    CaseSpec(5, "inside_to_right_edge", (INSIDE,), (RIGHT_EDGE,), OutcomeClass.PARTIALLY_VISIBLE),
    CaseSpec(6, "inside_to_left_edge", (INSIDE,), (LEFT_EDGE,), OutcomeClass.PARTIALLY_VISIBLE),
    CaseSpec(7, "inside_to_top_edge", (INSIDE,), (TOP_EDGE,), OutcomeClass.PARTIALLY_VISIBLE),
    CaseSpec(
        8, "inside_to_bottom_edge", (INSIDE,), (BOTTOM_EDGE,), OutcomeClass.PARTIALLY_VISIBLE
    ),
    CaseSpec(
        9,
        "inside_to_top_right_corner",
        (INSIDE,),
        (TOP_RIGHT_CORNER,),
        OutcomeClass.PARTIALLY_VISIBLE,
    ),
    CaseSpec(
        10,
        "inside_to_top_left_corner",
        (INSIDE,),
        (TOP_LEFT_CORNER,),
        OutcomeClass.PARTIALLY_VISIBLE,
    ),
    CaseSpec(
        11,
        "inside_to_bottom_right_corner",
        (INSIDE,),
        (BOTTOM_RIGHT_CORNER,),
        OutcomeClass.PARTIALLY_VISIBLE,
    ),
    CaseSpec(
        12,
        "inside_to_bottom_left_corner",
        (INSIDE,),
        (BOTTOM_LEFT_CORNER,),
        OutcomeClass.PARTIALLY_VISIBLE,
    ),
    CaseSpec(
        13,
        "right_edge_to_below",
        (RIGHT_EDGE,),
        (BOTTOM_EDGE, BOTTOM_LEFT_CORNER),
        OutcomeClass.MIXED,
        constraint="no_tie_bottom_right",
    ),
    CaseSpec(
        14,
        "right_edge_to_center",
        (RIGHT_EDGE,),
        (INSIDE, LEFT_EDGE),
        OutcomeClass.PARTIALLY_VISIBLE,
    ),
    CaseSpec(
        15,
        "right_edge_to_above",
        (RIGHT_EDGE,),
        (TOP_EDGE, TOP_LEFT_CORNER),
        OutcomeClass.MIXED,
        constraint="no_tie_top_right",
    ),
    CaseSpec(
        16,
        "corner_passing_outside",
        (TOP_RIGHT_CORNER,),
        (LEFT_EDGE,),
        OutcomeClass.REJECTED,
        constraint="far_side_separating",
    ),
    CaseSpec(
        17,
        "corner_crossing_to_left_edge",
        (TOP_RIGHT_CORNER,),
        (LEFT_EDGE,),
        OutcomeClass.PARTIALLY_VISIBLE,
        constraint="far_side_crossing",
    ),
    CaseSpec(
        18,
        "corner_to_bottom_edge",
        (TOP_RIGHT_CORNER,),
        (BOTTOM_EDGE,),
        OutcomeClass.MIXED,
        constraint="no_tie_bottom_right",
    ),
    CaseSpec(
        19,
        "corner_to_inside",
        (TOP_RIGHT_CORNER,),
        (INSIDE,),
        OutcomeClass.PARTIALLY_VISIBLE,
    ),
    CaseSpec(
        20,
        "corner_to_far_corner",
        (TOP_RIGHT_CORNER,),
        (BOTTOM_LEFT_CORNER,),
        OutcomeClass.MIXED,
        constraint="no_tie_bottom_right_top_left",
    ),
    CaseSpec(
        21,
        "outside_diagonal_crossing",
        (BOTTOM_LEFT_CORNER,),
        (TOP_RIGHT_CORNER,),
        OutcomeClass.PARTIALLY_VISIBLE,
        constraint="crossing_interior",
        grid_bits=4,
    ),
)

CASES_BY_ID = {spec.case_id: spec for spec in CASES}

# Batches to try before declaring a case's constraints unsatisfiable.
_MAX_EMPTY_BATCHES = 20


def _sample_points(
    rng: np.random.Generator, regions: tuple[Region, ...], n: int, scale: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """n points, each in a region picked uniformly from ``regions``.

    Integer grid sampling: z first, then x and y uniform over the
    region's admissible range conditional on z.  Regions with a beyond
    class cap z at half range so the outside band is never empty.
    """
    limit = 8 * scale
    if len(regions) > 1:
        choice = rng.integers(0, len(regions), n)
    else:
        choice = np.zeros(n, dtype=np.int64)
    has_beyond = np.array(
        [r.xclass is not XClass.BETWEEN or r.yclass is not YClass.BETWEEN for r in regions]
    )[choice]
    z_high = np.where(has_beyond, limit // 2, limit)
    z = rng.integers(1, z_high, endpoint=True)

    xlo = np.empty(n, dtype=np.int64)
    xhi = np.empty(n, dtype=np.int64)
    ylo = np.empty(n, dtype=np.int64)
    yhi = np.empty(n, dtype=np.int64)
    for idx, region in enumerate(regions):
        mask = choice == idx
        if region.xclass is XClass.BETWEEN:
            xlo[mask] = -z[mask]
            xhi[mask] = z[mask]
        elif region.xclass is XClass.BEYOND_RIGHT:
            xlo[mask] = -limit
            xhi[mask] = -z[mask] - 1
        else:
            xlo[mask] = z[mask] + 1
            xhi[mask] = limit
        if region.yclass is YClass.BETWEEN:
            ylo[mask] = -z[mask]
            yhi[mask] = z[mask]
        elif region.yclass is YClass.BEYOND_TOP:
            ylo[mask] = z[mask] + 1
            yhi[mask] = limit
        else:
            ylo[mask] = -limit
            yhi[mask] = -z[mask] - 1
    x = rng.integers(xlo, xhi, endpoint=True)
    y = rng.integers(ylo, yhi, endpoint=True)
    inv = 1.0 / scale
    return x * inv, y * inv, z * inv


def case_rng(seed: int, case_id: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, case_id))))


def generate_case_columns(spec: CaseSpec, seed: int, n: int) -> Columns:
    """Deterministic corpus for one case, as six float64 columns."""
    if n < 1:
        raise ValueError("need n >= 1 segments")
    rng = case_rng(seed, spec.case_id)
    scale = 1 << spec.grid_bits
    predicate = CONSTRAINTS[spec.constraint] if spec.constraint else None
    parts: list[np.ndarray] = []
    collected = 0
    empty_batches = 0
    while collected < n:
        batch = max(1024, n - collected)
        xa, ya, za = _sample_points(rng, spec.regions_a, batch, scale)
        xb, yb, zb = _sample_points(rng, spec.regions_b, batch, scale)
        cols = (xa, ya, za, xb, yb, zb)
        if predicate is not None:
            keep = predicate(cols)
            if not keep.any():
                empty_batches += 1
                if empty_batches >= _MAX_EMPTY_BATCHES:
                    raise ValueError(
                        f"case {spec.case_id} ({spec.name}): constraint "
                        f"{spec.constraint!r} looks unsatisfiable"
                    )
                continue
            cols = tuple(c[keep] for c in cols)
        empty_batches = 0
        parts.append(np.stack(cols, axis=1))
        collected += parts[-1].shape[0]
    data = np.concatenate(parts, axis=0)[:n]
    return tuple(data[:, i].copy() for i in range(6))  # type: ignore[return-value]


def columns_as_tuples(cols: Columns) -> list[tuple[float, ...]]:
    """Six columns -> list of (xa, ya, za, xb, yb, zb) float tuples."""
    return list(zip(*(c.tolist() for c in cols)))


def generate_case(spec: CaseSpec, seed: int, n: int) -> Iterator[Segment3]:
    """Stream of Segment3 for one case; deterministic given (spec, seed)."""
    for xa, ya, za, xb, yb, zb in columns_as_tuples(generate_case_columns(spec, seed, n)):
        yield Segment3(Point3(xa, ya, za), Point3(xb, yb, zb))


def parse_case_list(text: str) -> list[CaseSpec]:
    """Parse a CLI case selector: 'all' or a comma list like '1,5,21'."""
    if text.strip().lower() == "all":
        return list(CASES)
    specs = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        case_id = int(token)
        if case_id not in CASES_BY_ID:
            raise ValueError(f"unknown case id {case_id} (valid: 1..{len(CASES)})")
        specs.append(CASES_BY_ID[case_id])
    if not specs:
        raise ValueError("empty case list")
    return specs
