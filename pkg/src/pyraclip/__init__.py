"""Line-segment clipping against the unitary viewing pyramid in E3.

Four clippers share one outcome contract: a region-dispatch pyramidal
clipper that computes only the intersection parameters which become
output endpoints, plus Cohen-Sutherland, Liang-Barsky and Cyrus-Beck
baselines.  An exact rational oracle provides ground truth, a seeded
21-case generator provides corpora, and a benchmark harness measures
timing and exact operation counts.
"""
from .baselines import Outcode, cb_clip, clip_cb, clip_cs, clip_lb, cs_clip, lb_clip, outcode
from .cases import CASES, CASES_BY_ID, CaseSpec, OutcomeClass, generate_case, PRNG_NAME
from .counting import CountedFloat, OpCounts, count_call, unwrap
from .exact import ExactOutcome, Rational, VerificationVerdict, clip_exact, verify
from .geometry import (
    ALL_REGIONS,
    Boundary,
    Delta3,
    Point3,
    PyramidEdge,
    Region,
    Segment3,
    XClass,
    YClass,
    boundary_functional,
    boundary_parameter,
    classify_region,
    edge_plane_side,
    eval_segment,
    point_inside,
    reflect_y,
    rotate_quarter,
)
from ._version import __version__
from .outcomes import ClipMode, ClipOutcome, Verdict
from .pc import (
    BranchRecorder,
    CASE_TREE_BRANCHES,
    clip_pc,
    clip_pc_recorded,
    pc_clip,
    pc_clip_reference,
    preclip_z,
)

KERNELS = {
    "pc": pc_clip,
    "cs": cs_clip,
    "lb": lb_clip,
    "cb": cb_clip,
}

CLIPPERS = {
    "pc": clip_pc,
    "cs": clip_cs,
    "lb": clip_lb,
    "cb": clip_cb,
}

__all__ = [
    "ALL_REGIONS",
    "Boundary",
    "BranchRecorder",
    "CASES",
    "CASES_BY_ID",
    "CASE_TREE_BRANCHES",
    "CLIPPERS",
    "CaseSpec",
    "ClipMode",
    "ClipOutcome",
    "CountedFloat",
    "Delta3",
    "ExactOutcome",
    "KERNELS",
    "OpCounts",
    "Outcode",
    "OutcomeClass",
    "PRNG_NAME",
    "Point3",
    "PyramidEdge",
    "Rational",
    "Region",
    "Segment3",
    "Verdict",
    "VerificationVerdict",
    "XClass",
    "YClass",
    "boundary_functional",
    "boundary_parameter",
    "cb_clip",
    "classify_region",
    "clip_cb",
    "clip_cs",
    "clip_exact",
    "clip_lb",
    "clip_pc",
    "clip_pc_recorded",
    "count_call",
    "cs_clip",
    "edge_plane_side",
    "eval_segment",
    "generate_case",
    "lb_clip",
    "outcode",
    "pc_clip",
    "pc_clip_reference",
    "point_inside",
    "preclip_z",
    "reflect_y",
    "rotate_quarter",
    "unwrap",
    "verify",
]
