"""Baseline clippers: Cohen-Sutherland (E3), Liang-Barsky, Cyrus-Beck.

Textbook formulations specialized to the pyramid's four homogeneous
face planes, sharing the boundary functionals of :mod:`.geometry` so any
numeric skew is common to all clippers.  Each kernel takes six plain
coordinates (z >= 0 expected) and returns None on rejection or the tuple
(t_enter, t_exit, x1, y1, z1, x2, y2, z2); the kernels are generic over
the scalar type, so the instrumented counting scalar runs through the
same code.
"""
from __future__ import annotations

import enum

from .geometry import Segment3
from .outcomes import ClipMode, ClipOutcome
from .pc import _clip_with_kernel


class Outcode(enum.IntFlag):
    """Per-point bitmask of violated boundaries (strict tests).

    BEYOND_RIGHT and BEYOND_LEFT are mutually exclusive for z >= 0, as
    are BEYOND_BOTTOM and BEYOND_TOP.
    """

    INSIDE = 0
    BEYOND_RIGHT = 1   # x < -z
    BEYOND_LEFT = 2    # x > z
    BEYOND_BOTTOM = 4  # y < -z
    BEYOND_TOP = 8     # y > z


def outcode(x, y, z) -> int:
    code = 0
    if x < -z:
        code = 1
    elif x > z:
        code = 2
    if y < -z:
        code |= 4
    elif y > z:
        code |= 8
    return code


# Iteration bound for the outcode loop.  Each endpoint is clipped at
# most once per boundary (re-clips on an already-visited boundary are
# suppressed, see below), so 8 clip steps is already unreachable.
_CS_MAX_STEPS = 12


def cs_clip(xa, ya, za, xb, yb, zb):
    """Cohen-Sutherland extended to the pyramid.

    Trivial accept on zero outcodes, trivial reject when the outcodes
    share a bit, otherwise iteratively clips the outside endpoint
    against one violated boundary in the fixed order right, left,
    bottom, top.  Outcodes are recomputed from the clipped coordinates
    each round; the step parameter is taken against the original
    endpoints, so it is directly the global t of the crossing.

    After clipping to a face, the moved coordinate is snapped exactly
    onto the face plane, and a boundary already used for an endpoint is
    never used for it again: a recomputed outcode can re-flag that face
    only through rounding of an on-plane point.
    """
    if xa == xb and ya == yb and za == zb:
        if za >= 0.0 and -za <= xa <= za and -za <= ya <= za:
            return (0.0, 0.0, xa, ya, za, xa, ya, za)
        return None
    # Face functionals at the original endpoints (right, left, bottom, top).
    fra = xa + za
    fla = za - xa
    fba = ya + za
    fta = za - ya
    frb = xb + zb
    flb = zb - xb
    fbb = yb + zb
    ftb = zb - yb
    ca = 0
    if xa < -za:
        ca = 1
    elif xa > za:
        ca = 2
    if ya < -za:
        ca |= 4
    elif ya > za:
        ca |= 8
    cb = 0
    if xb < -zb:
        cb = 1
    elif xb > zb:
        cb = 2
    if yb < -zb:
        cb |= 4
    elif yb > zb:
        cb |= 8
    ta = 0.0
    tb = 1.0
    cxa, cya, cza = xa, ya, za
    cxb, cyb, czb = xb, yb, zb
    used_a = 0
    used_b = 0
    dx = xb - xa
    dy = yb - ya
    dz = zb - za
    for _ in range(_CS_MAX_STEPS):
        if not (ca | cb):
            return (ta, tb, cxa, cya, cza, cxb, cyb, czb)
        if ca & cb:
            return None
        if ca:
            if ca & 1:
                t = fra / (fra - frb)
                bit = 1
            elif ca & 2:
                t = fla / (fla - flb)
                bit = 2
            elif ca & 4:
                t = fba / (fba - fbb)
                bit = 4
            else:
                t = fta / (fta - ftb)
                bit = 8
            cza = t * dz + za
            cya = t * dy + ya
            cxa = t * dx + xa
            if bit == 1:
                cxa = -cza
            elif bit == 2:
                cxa = cza
            elif bit == 4:
                cya = -cza
            else:
                cya = cza
            ta = t
            used_a |= bit
            ca = 0
            if cxa < -cza:
                ca = 1
            elif cxa > cza:
                ca = 2
            if cya < -cza:
                ca |= 4
            elif cya > cza:
                ca |= 8
            ca &= ~used_a
        else:
            if cb & 1:
                t = fra / (fra - frb)
                bit = 1
            elif cb & 2:
                t = fla / (fla - flb)
                bit = 2
            elif cb & 4:
                t = fba / (fba - fbb)
                bit = 4
            else:
                t = fta / (fta - ftb)
                bit = 8
            czb = t * dz + za
            cyb = t * dy + ya
            cxb = t * dx + xa
            if bit == 1:
                cxb = -czb
            elif bit == 2:
                cxb = czb
            elif bit == 4:
                cyb = -czb
            else:
                cyb = czb
            tb = t
            used_b |= bit
            cb = 0
            if cxb < -czb:
                cb = 1
            elif cxb > czb:
                cb = 2
            if cyb < -czb:
                cb |= 4
            elif cyb > czb:
                cb |= 8
            cb &= ~used_b
    raise RuntimeError("outcode clipping failed to converge")


def lb_clip(xa, ya, za, xb, yb, zb):
    """Liang-Barsky interval narrowing over the four face constraints.

    Each constraint f(a) + t*f(d) >= 0 contributes a crossing ratio only
    when exactly one endpoint violates it; when both satisfy it the
    constraint cannot bind, and when both violate it the segment is
    invisible.  Divisions therefore happen only for candidate faces.
    """
    if xa == xb and ya == yb and za == zb:
        if za >= 0.0 and -za <= xa <= za and -za <= ya <= za:
            return (0.0, 0.0, xa, ya, za, xa, ya, za)
        return None
    t0 = 0.0
    t1 = 1.0
    # right: x + z >= 0
    fa = xa + za
    fb = xb + zb
    if fa < 0.0:
        if fb < 0.0:
            return None
        t0 = fa / (fa - fb)
    elif fb < 0.0:
        t1 = fa / (fa - fb)
    # left: z - x >= 0
    fa = za - xa
    fb = zb - xb
    if fa < 0.0:
        if fb < 0.0:
            return None
        t = fa / (fa - fb)
        if t > t0:
            t0 = t
            if t0 > t1:
                return None
    elif fb < 0.0:
        t = fa / (fa - fb)
        if t < t1:
            t1 = t
            if t0 > t1:
                return None
    # bottom: y + z >= 0
    fa = ya + za
    fb = yb + zb
    if fa < 0.0:
        if fb < 0.0:
            return None
        t = fa / (fa - fb)
        if t > t0:
            t0 = t
            if t0 > t1:
                return None
    elif fb < 0.0:
        t = fa / (fa - fb)
        if t < t1:
            t1 = t
            if t0 > t1:
                return None
    # top: z - y >= 0
    fa = za - ya
    fb = zb - yb
    if fa < 0.0:
        if fb < 0.0:
            return None
        t = fa / (fa - fb)
        if t > t0:
            t0 = t
            if t0 > t1:
                return None
    elif fb < 0.0:
        t = fa / (fa - fb)
        if t < t1:
            t1 = t
            if t0 > t1:
                return None
    if t0 == 0.0:
        if t1 == 1.0:
            return (0.0, 1.0, xa, ya, za, xb, yb, zb)
        x1, y1, z1 = xa, ya, za
    else:
        dx = xb - xa
        dy = yb - ya
        dz = zb - za
        x1 = t0 * dx + xa
        y1 = t0 * dy + ya
        z1 = t0 * dz + za
    if t1 == 1.0:
        return (t0, t1, x1, y1, z1, xb, yb, zb)
    dx = xb - xa
    dy = yb - ya
    dz = zb - za
    return (t0, t1, x1, y1, z1, t1 * dx + xa, t1 * dy + ya, t1 * dz + za)


# Inward plane normals: the pyramid's faces all pass through the origin,
# so the Cyrus-Beck plane point can be the origin for each face.
_CB_PLANES = (
    (1.0, 0.0, 1.0),   # right
    (-1.0, 0.0, 1.0),  # left
    (0.0, 1.0, 1.0),   # bottom
    (0.0, -1.0, 1.0),  # top
)


def cb_clip(xa, ya, za, xb, yb, zb):
    """Cyrus-Beck against the four planes, with full dot products.

    The generic convex-region formulation: for each plane with inward
    normal n and plane point q (the origin here), the crossing is
    t = n.(q - a) / n.d, entering when n.d > 0.  A crossing ratio is
    computed for every non-parallel plane.
    """
    if xa == xb and ya == yb and za == zb:
        if za >= 0.0 and -za <= xa <= za and -za <= ya <= za:
            return (0.0, 0.0, xa, ya, za, xa, ya, za)
        return None
    dx = xb - xa
    dy = yb - ya
    dz = zb - za
    t0 = 0.0
    t1 = 1.0
    for nx, ny, nz in _CB_PLANES:
        na = nx * xa + ny * ya + nz * za
        nd = nx * dx + ny * dy + nz * dz
        if nd == 0.0:
            if na < 0.0:
                return None
            continue
        t = -na / nd
        if nd > 0.0:
            if t > t0:
                t0 = t
                if t0 > t1:
                    return None
        else:
            if t < t1:
                t1 = t
                if t0 > t1:
                    return None
    if t0 == 0.0 and t1 == 1.0:
        return (0.0, 1.0, xa, ya, za, xb, yb, zb)
    if t0 == 0.0:
        x1, y1, z1 = xa, ya, za
    else:
        x1 = t0 * dx + xa
        y1 = t0 * dy + ya
        z1 = t0 * dz + za
    if t1 == 1.0:
        return (t0, t1, x1, y1, z1, xb, yb, zb)
    return (t0, t1, x1, y1, z1, t1 * dx + xa, t1 * dy + ya, t1 * dz + za)


def clip_cs(segment: Segment3, mode: ClipMode = ClipMode.STRICT) -> ClipOutcome:
    """Clip with the Cohen-Sutherland outcode algorithm."""
    return _clip_with_kernel(cs_clip, segment, mode)


def clip_lb(segment: Segment3, mode: ClipMode = ClipMode.STRICT) -> ClipOutcome:
    """Clip with the Liang-Barsky parametric algorithm."""
    return _clip_with_kernel(lb_clip, segment, mode)


def clip_cb(segment: Segment3, mode: ClipMode = ClipMode.STRICT) -> ClipOutcome:
    """Clip with the Cyrus-Beck parametric algorithm."""
    return _clip_with_kernel(cb_clip, segment, mode)
