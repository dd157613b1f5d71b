"""Region-dispatch pyramidal clipper.

The clipper classifies endpoint A among the 9 regions of the positive
half-space, then classifies B among sub-regions bounded by the pyramid
faces and by planes through A and one pyramid edge.  A single sign test
against such a plane decides which face carries an intersection point,
so the only divisions ever performed are the ones producing output
endpoints: at most two per call, none for fully visible or rejected
segments.

Only one canonical code path exists per distinct geometry.  Mirror-image
configurations are reduced onto the canonical ones by quarter-turn
rotations about the z axis (which permute the face roles cyclically) and
by the y-mirror (which swaps top/bottom roles); both maps preserve the
pyramid and the segment parameterization exactly, negation being exact
in floating point.

Two builds of the same tree live here:

* ``clip_tree`` / ``pc_clip_reference`` -- the readable reference.  It
  accepts any scalar type with arithmetic operators (plain floats or the
  instrumented counting scalar) and an optional branch recorder.
* ``pc_clip`` -- a flattened single-function kernel for timing, with no
  helper calls and no instrumentation.  Its arithmetic mirrors the
  reference expression by expression; the test suite asserts bitwise
  identical outputs across both builds.

Each plane sign test below carries a comment stating the crossing-order
fact it encodes; the determinant f(a)*g(d) - g(a)*f(d) of an edge's
functional pair (f, g) is positive, zero or negative exactly as the
linear form f(a)*g(p) - g(a)*f(p), which vanishes on the plane through
point a and that edge, is positive, zero or negative at p = b.
"""
from __future__ import annotations

from typing import Callable, Optional

from .geometry import Segment3
from .outcomes import ClipMode, ClipOutcome

Recorder = Optional[Callable[[str], None]]


# ---------------------------------------------------------------------------
# Reference build: readable case tree with branch recording.
# ---------------------------------------------------------------------------


def _corner_to_far_side(xa, ya, za, xb, yb, zb, rec: Recorder):
    """A in the top-right corner, B beyond the left boundary.

    B lies in the left edge region or in the bottom-left corner region;
    the segment, if visible, enters through top or right and exits
    through left or bottom.
    """
    dx = xb - xa
    dy = yb - ya
    dz = zb - za
    # Passing above the pyramid: the left crossing precedes the top
    # crossing, i.e. the determinant l(a)*t(d) - t(a)*l(d) of the
    # top-left edge plane is negative.  Rearranged below so each side is
    # one product: (xa-za)*(dz-dy) = -l(a)*t(d), (ya-za)*(dz-dx) = -t(a)*l(d).
    if (xa - za) * (dz - dy) > (ya - za) * (dz - dx):
        if rec:
            rec("corner_far.reject_top_left")
        return None
    if yb > -zb:
        # B in the left edge region: the exit is on the left face.
        if rec:
            rec("corner_far.exit_left_edge")
        t_exit = (xa - za) / (dz - dx)
    else:
        # B in the bottom-left corner region.  Passing below the
        # pyramid: bottom crossing precedes the right crossing, i.e.
        # r(a)*b(d) - b(a)*r(d) > 0 for the bottom-right edge plane.
        if (xa + za) * (dz + dy) > (ya + za) * (dz + dx):
            if rec:
                rec("corner_far.reject_bottom_right")
            return None
        # Exit face: left crossing precedes bottom crossing exactly when
        # l(a)*b(d) - b(a)*l(d) > 0 for the bottom-left edge plane.
        if (za - xa) * (dy + dz) > (za + ya) * (dz - dx):
            if rec:
                rec("corner_far.exit_left")
            t_exit = (xa - za) / (dz - dx)
        else:
            if rec:
                rec("corner_far.exit_bottom")
            t_exit = -(ya + za) / (dz + dy)
    # Entry face: the top crossing comes after the right crossing (and
    # is therefore the true entry) exactly when r(a)*t(d) - t(a)*r(d) > 0
    # for the top-right edge plane.
    if (xa + za) * (dz - dy) > (za - ya) * (dz + dx):
        if rec:
            rec("corner_far.enter_top")
        t_enter = (ya - za) / (dz - dy)
    else:
        if rec:
            rec("corner_far.enter_right")
        t_enter = -(xa + za) / (dz + dx)
    return (t_enter, t_exit)


def _corner_to_center(xa, ya, za, xb, yb, zb, rec: Recorder):
    """A in the top-right corner, B inside or in the bottom edge region."""
    dx = xb - xa
    dy = yb - ya
    dz = zb - za
    if yb < -zb:
        # B in the bottom edge region.  Same bottom-right edge plane
        # rejection as the far-side case: bottom crossing precedes the
        # right crossing <=> r(a)*b(d) - b(a)*r(d) > 0.
        if (xa + za) * (dz + dy) > (ya + za) * (dz + dx):
            if rec:
                rec("corner_center.reject_bottom_right")
            return None
        if rec:
            rec("corner_center.exit_bottom")
        t_exit = -(ya + za) / (dz + dy)
    else:
        # B inside: the B endpoint itself is the visible end.
        if rec:
            rec("corner_center.b_inside")
        t_exit = 1.0
    # Entry via the top-right edge plane, as in the far-side case.
    if (xa + za) * (dz - dy) > (za - ya) * (dz + dx):
        if rec:
            rec("corner_center.enter_top")
        t_enter = (ya - za) / (dz - dy)
    else:
        if rec:
            rec("corner_center.enter_right")
        t_enter = -(xa + za) / (dz + dx)
    return (t_enter, t_exit)


def _from_corner(xa, ya, za, xb, yb, zb, rec: Recorder):
    """A in the top-right corner region, B not beyond the right boundary."""
    if yb > zb:
        # B also beyond the top boundary: entirely above the top face.
        if rec:
            rec("corner.reject_b_beyond_top")
        return None
    if xb > zb:
        if rec:
            rec("corner.b_far_side")
        return _corner_to_far_side(xa, ya, za, xb, yb, zb, rec)
    if rec:
        rec("corner.b_center")
    return _corner_to_center(xa, ya, za, xb, yb, zb, rec)


def _edge_to_below(xa, ya, za, xb, yb, zb, rec: Recorder):
    """A in the right edge region, B beyond the bottom boundary."""
    dx = xb - xa
    dy = yb - ya
    dz = zb - za
    # Passing below the pyramid: bottom crossing precedes the right
    # crossing <=> r(a)*b(d) - b(a)*r(d) > 0 (bottom-right edge plane).
    if (xa + za) * (dz + dy) > (ya + za) * (dz + dx):
        if rec:
            rec("edge_below.reject_bottom_right")
        return None
    if xb > zb:
        # B in the bottom-left corner: exit through left when the left
        # crossing precedes the bottom one, i.e. l(a)*b(d) - b(a)*l(d) > 0
        # (bottom-left edge plane).
        if (za - xa) * (dz + dy) > (za + ya) * (dz - dx):
            if rec:
                rec("edge_below.corner_exit_left")
            t_exit = (xa - za) / (dz - dx)
        else:
            if rec:
                rec("edge_below.corner_exit_bottom")
            t_exit = -(ya + za) / (dz + dy)
    else:
        # B in the bottom edge region: the exit is on the bottom face.
        if rec:
            rec("edge_below.edge_exit_bottom")
        t_exit = -(ya + za) / (dz + dy)
    # The entry is always on the right face.
    t_enter = -(xa + za) / (dz + dx)
    return (t_enter, t_exit)


def _edge_to_center(xa, ya, za, xb, yb, zb, rec: Recorder):
    """A in the right edge region, B inside or in the left edge region.

    Always visible: only the right constraint (and possibly the left
    one) binds, and a segment cannot violate both on z >= 0 data.
    """
    dx = xb - xa
    dz = zb - za
    t_enter = -(xa + za) / (dz + dx)
    if xb > zb:
        if rec:
            rec("edge_center.exit_left")
        t_exit = (xa - za) / (dz - dx)
    else:
        if rec:
            rec("edge_center.b_inside")
        t_exit = 1.0
    return (t_enter, t_exit)


def _from_edge(xa, ya, za, xb, yb, zb, rec: Recorder):
    """A in the right edge region, B not beyond the right boundary."""
    if yb < -zb:
        if rec:
            rec("edge.b_below")
        return _edge_to_below(xa, ya, za, xb, yb, zb, rec)
    if yb <= zb:
        if rec:
            rec("edge.b_center")
        return _edge_to_center(xa, ya, za, xb, yb, zb, rec)
    # B beyond the top boundary: the y-mirror maps this onto the
    # B-beyond-bottom case (top/bottom roles swap, left/right are kept).
    if rec:
        rec("edge.b_above_mirrored")
    return _edge_to_below(xa, -ya, za, xb, -yb, zb, rec)


def _from_beyond_right(xa, ya, za, xb, yb, zb, rec: Recorder):
    """A beyond the right boundary."""
    if xb < -zb:
        # Both endpoints beyond the right boundary: invisible.
        if rec:
            rec("beyond_right.reject_b_beyond_right")
        return None
    if ya > za:
        if rec:
            rec("beyond_right.a_corner")
        return _from_corner(xa, ya, za, xb, yb, zb, rec)
    if ya >= -za:
        if rec:
            rec("beyond_right.a_edge")
        return _from_edge(xa, ya, za, xb, yb, zb, rec)
    # A in the bottom-right corner: the y-mirror maps it onto the
    # top-right corner case.
    if rec:
        rec("beyond_right.a_corner_mirrored")
    return _from_corner(xa, -ya, za, xb, -yb, zb, rec)


def _inside_to_corner(xa, ya, za, xb, yb, zb, rec: Recorder):
    """A inside, B in the top-right corner region (beyond right and top).

    One endpoint of the output is A itself; the other is where the
    segment leaves through the top or the right face.  It leaves through
    the top exactly when the top crossing precedes the right crossing,
    i.e. when the determinant r(a)*t(d) - t(a)*r(d) of the top-right
    edge plane is <= 0 (for a on that plane's inside, the determinant
    grows toward the right face).
    """
    dx = xb - xa
    dy = yb - ya
    dz = zb - za
    if (xa + za) * (dz - dy) > (za - ya) * (dz + dx):
        if rec:
            rec("inside_corner.exit_right")
        t_exit = -(xa + za) / (dz + dx)
    else:
        if rec:
            rec("inside_corner.exit_top")
        t_exit = (ya - za) / (dz - dy)
    return (0.0, t_exit)


def _inside_to_edge(xa, ya, za, xb, yb, zb, rec: Recorder):
    """A inside, B in the right edge region: exit on the right face."""
    dx = xb - xa
    dz = zb - za
    t_exit = -(xa + za) / (dz + dx)
    return (0.0, t_exit)


def _from_inside(xa, ya, za, xb, yb, zb, rec: Recorder):
    """A inside the pyramid: nine-way dispatch on B's region.

    Every corner region rotates onto the top-right corner and every edge
    region onto the right edge region by a quarter turn, so only two
    leaf computations exist.
    """
    if xb < -zb:
        if yb > zb:
            if rec:
                rec("inside.b_top_right_corner")
            return _inside_to_corner(xa, ya, za, xb, yb, zb, rec)
        if yb >= -zb:
            if rec:
                rec("inside.b_right_edge")
            return _inside_to_edge(xa, ya, za, xb, yb, zb, rec)
        if rec:
            rec("inside.b_bottom_right_corner")
        return _inside_to_corner(ya, -xa, za, yb, -xb, zb, rec)  # three-quarter turn
    if xb > zb:
        if yb > zb:
            if rec:
                rec("inside.b_top_left_corner")
            return _inside_to_corner(-ya, xa, za, -yb, xb, zb, rec)  # quarter turn
        if yb < -zb:
            if rec:
                rec("inside.b_bottom_left_corner")
            return _inside_to_corner(-xa, -ya, za, -xb, -yb, zb, rec)  # half turn
        if rec:
            rec("inside.b_left_edge")
        return _inside_to_edge(-xa, -ya, za, -xb, -yb, zb, rec)  # half turn
    if yb > zb:
        if rec:
            rec("inside.b_top_edge")
        return _inside_to_edge(-ya, xa, za, -yb, xb, zb, rec)  # quarter turn
    if yb < -zb:
        if rec:
            rec("inside.b_bottom_edge")
        return _inside_to_edge(ya, -xa, za, yb, -xb, zb, rec)  # three-quarter turn
    if rec:
        rec("inside.fully_visible")
    return (0.0, 1.0)


def clip_tree(xa, ya, za, xb, yb, zb, rec: Recorder = None):
    """Reference case tree.

    Expects z >= 0 at both endpoints.  Returns (t_enter, t_exit) with
    t_enter <= t_exit, or None when the segment is invisible.  Generic
    over the scalar type of its arguments.
    """
    if xa == xb and ya == yb and za == zb:
        # Degenerate segment: a single point, visible iff inside.
        if za >= 0.0 and -za <= xa <= za and -za <= ya <= za:
            if rec:
                rec("degenerate.inside")
            return (0.0, 0.0)
        if rec:
            rec("degenerate.outside")
        return None
    if xa < -za:
        if rec:
            rec("shell.a_beyond_right")
        return _from_beyond_right(xa, ya, za, xb, yb, zb, rec)
    if xa <= za:
        if ya > za:
            # A in the top edge region: a quarter turn carries it onto
            # the right edge region (and top/right roles along with it).
            if rec:
                rec("shell.a_top_edge")
            return _from_beyond_right(-ya, xa, za, -yb, xb, zb, rec)
        if ya < -za:
            # A in the bottom edge region: three-quarter turn.
            if rec:
                rec("shell.a_bottom_edge")
            return _from_beyond_right(ya, -xa, za, yb, -xb, zb, rec)
        if rec:
            rec("shell.a_inside")
        return _from_inside(xa, ya, za, xb, yb, zb, rec)
    # A beyond the left boundary: a half turn carries it onto the
    # beyond-right case.
    if rec:
        rec("shell.a_beyond_left")
    return _from_beyond_right(-xa, -ya, za, -xb, -yb, zb, rec)


def _emit(xa, ya, za, xb, yb, zb, t_enter, t_exit):
    """Output endpoints on the original segment: p = t*delta + a."""
    dx = xb - xa
    dy = yb - ya
    dz = zb - za
    if t_enter == 0.0:
        x1 = xa
        y1 = ya
        z1 = za
    else:
        x1 = t_enter * dx + xa
        y1 = t_enter * dy + ya
        z1 = t_enter * dz + za
    if t_exit == 1.0:
        return (t_enter, t_exit, x1, y1, z1, xb, yb, zb)
    return (
        t_enter,
        t_exit,
        x1,
        y1,
        z1,
        t_exit * dx + xa,
        t_exit * dy + ya,
        t_exit * dz + za,
    )


def pc_clip_reference(xa, ya, za, xb, yb, zb, rec: Recorder = None):
    """Reference build of the full clipper, including endpoint output.

    Returns None or (t_enter, t_exit, x1, y1, z1, x2, y2, z2).
    """
    ts = clip_tree(xa, ya, za, xb, yb, zb, rec)
    if ts is None:
        return None
    t_enter, t_exit = ts
    if t_enter == 0.0 and t_exit == 1.0:
        return (t_enter, t_exit, xa, ya, za, xb, yb, zb)
    if t_enter == 0.0 and t_exit == 0.0 and xa == xb and ya == yb and za == zb:
        return (0.0, 0.0, xa, ya, za, xa, ya, za)
    return _emit(xa, ya, za, xb, yb, zb, t_enter, t_exit)


# ---------------------------------------------------------------------------
# Timed build: one flat function, no calls, no instrumentation.
# The working variables wxa/wya/wxb/wyb hold the rotated/mirrored frame;
# z coordinates are invariant under every reduction map.  All arithmetic
# mirrors the reference build expression for expression.
# ---------------------------------------------------------------------------


def pc_clip(xa, ya, za, xb, yb, zb):
    """Timed kernel.  Same contract as pc_clip_reference, no recorder."""
    if xa == xb and ya == yb and za == zb:
        if za >= 0.0 and -za <= xa <= za and -za <= ya <= za:
            return (0.0, 0.0, xa, ya, za, xa, ya, za)
        return None
    wxa = xa
    wya = ya
    wxb = xb
    wyb = yb
    if wxa < -za:
        pass
    elif wxa <= za:
        if wya > za:
            wxa = -ya
            wya = xa
            wxb = -yb
            wyb = xb
        elif wya < -za:
            wxa = ya
            wya = -xa
            wxb = yb
            wyb = -xb
        else:
            # ---- A inside: reduce B onto right edge / top-right corner ----
            if wxb < -zb:
                if wyb > zb:
                    corner = True
                elif wyb >= -zb:
                    corner = False
                else:
                    corner = True
                    wxa = ya
                    wya = -xa
                    wxb = yb
                    wyb = -xb
            elif wxb > zb:
                if wyb > zb:
                    corner = True
                    wxa = -ya
                    wya = xa
                    wxb = -yb
                    wyb = xb
                elif wyb < -zb:
                    corner = True
                    wxa = -xa
                    wya = -ya
                    wxb = -xb
                    wyb = -yb
                else:
                    corner = False
                    wxa = -xa
                    wya = -ya
                    wxb = -xb
                    wyb = -yb
            else:
                if wyb > zb:
                    corner = False
                    wxa = -ya
                    wya = xa
                    wxb = -yb
                    wyb = xb
                elif wyb < -zb:
                    corner = False
                    wxa = ya
                    wya = -xa
                    wxb = yb
                    wyb = -xb
                else:
                    return (0.0, 1.0, xa, ya, za, xb, yb, zb)
            dxx = wxb - wxa
            dzz = zb - za
            if corner:
                dyy = wyb - wya
                # Exit face choice via the top-right edge plane.
                if (wxa + za) * (dzz - dyy) > (za - wya) * (dzz + dxx):
                    t_exit = -(wxa + za) / (dzz + dxx)
                else:
                    t_exit = (wya - za) / (dzz - dyy)
            else:
                t_exit = -(wxa + za) / (dzz + dxx)
            dx = xb - xa
            dy = yb - ya
            dz = zb - za
            return (
                0.0,
                t_exit,
                xa,
                ya,
                za,
                t_exit * dx + xa,
                t_exit * dy + ya,
                t_exit * dz + za,
            )
    else:
        wxa = -xa
        wya = -ya
        wxb = -xb
        wyb = -yb
    # ---- working frame: A beyond the right boundary ----
    if wxb < -zb:
        return None
    if wya > za:
        pass
    elif wya >= -za:
        # ---- A in the right edge region ----
        dzz = zb - za
        if wyb < -zb:
            pass
        elif wyb <= zb:
            # B inside or in the left edge region: always visible.
            dxx = wxb - wxa
            t_enter = -(wxa + za) / (dzz + dxx)
            if wxb > zb:
                t_exit = (wxa - za) / (dzz - dxx)
            else:
                t_exit = 1.0
            dx = xb - xa
            dy = yb - ya
            dz = zb - za
            x1 = t_enter * dx + xa
            y1 = t_enter * dy + ya
            z1 = t_enter * dz + za
            if t_exit == 1.0:
                return (t_enter, t_exit, x1, y1, z1, xb, yb, zb)
            return (
                t_enter,
                t_exit,
                x1,
                y1,
                z1,
                t_exit * dx + xa,
                t_exit * dy + ya,
                t_exit * dz + za,
            )
        else:
            # B beyond the top boundary: mirror onto beyond-bottom.
            wya = -wya
            wyb = -wyb
        # ---- B beyond the bottom boundary ----
        dxx = wxb - wxa
        dyy = wyb - wya
        # Bottom crossing precedes the right crossing: invisible.
        if (wxa + za) * (dzz + dyy) > (wya + za) * (dzz + dxx):
            return None
        if wxb > zb:
            # Bottom-left corner: exit face via the bottom-left edge plane.
            if (za - wxa) * (dzz + dyy) > (za + wya) * (dzz - dxx):
                t_exit = (wxa - za) / (dzz - dxx)
            else:
                t_exit = -(wya + za) / (dzz + dyy)
        else:
            t_exit = -(wya + za) / (dzz + dyy)
        t_enter = -(wxa + za) / (dzz + dxx)
        dx = xb - xa
        dy = yb - ya
        dz = zb - za
        return (
            t_enter,
            t_exit,
            t_enter * dx + xa,
            t_enter * dy + ya,
            t_enter * dz + za,
            t_exit * dx + xa,
            t_exit * dy + ya,
            t_exit * dz + za,
        )
    else:
        # A in the bottom-right corner: mirror onto the top-right corner.
        wya = -wya
        wyb = -wyb
    # ---- working frame: A in the top-right corner ----
    if wyb > zb:
        return None
    dxx = wxb - wxa
    dyy = wyb - wya
    dzz = zb - za
    if wxb > zb:
        # B beyond the left boundary.
        # Passing above the pyramid (top-left edge plane): invisible.
        if (wxa - za) * (dzz - dyy) > (wya - za) * (dzz - dxx):
            return None
        if wyb > -zb:
            t_exit = (wxa - za) / (dzz - dxx)
        else:
            # Passing below the pyramid (bottom-right edge plane): invisible.
            if (wxa + za) * (dzz + dyy) > (wya + za) * (dzz + dxx):
                return None
            if (za - wxa) * (dyy + dzz) > (za + wya) * (dzz - dxx):
                t_exit = (wxa - za) / (dzz - dxx)
            else:
                t_exit = -(wya + za) / (dzz + dyy)
    else:
        if wyb < -zb:
            if (wxa + za) * (dzz + dyy) > (wya + za) * (dzz + dxx):
                return None
            t_exit = -(wya + za) / (dzz + dyy)
        else:
            t_exit = 1.0
    # Entry face via the top-right edge plane.
    if (wxa + za) * (dzz - dyy) > (za - wya) * (dzz + dxx):
        t_enter = (wya - za) / (dzz - dyy)
    else:
        t_enter = -(wxa + za) / (dzz + dxx)
    dx = xb - xa
    dy = yb - ya
    dz = zb - za
    x1 = t_enter * dx + xa
    y1 = t_enter * dy + ya
    z1 = t_enter * dz + za
    if t_exit == 1.0:
        return (t_enter, t_exit, x1, y1, z1, xb, yb, zb)
    return (
        t_enter,
        t_exit,
        x1,
        y1,
        z1,
        t_exit * dx + xa,
        t_exit * dy + ya,
        t_exit * dz + za,
    )


# ---------------------------------------------------------------------------
# Branch coverage bookkeeping.
# ---------------------------------------------------------------------------

# Every branch of the case tree proper.  The degenerate-segment guard is
# an artifact-level addition, not part of the tree, and is covered by
# dedicated unit and property tests instead of the generated corpus.
CASE_TREE_BRANCHES = frozenset(
    {
        "shell.a_beyond_right",
        "shell.a_top_edge",
        "shell.a_bottom_edge",
        "shell.a_inside",
        "shell.a_beyond_left",
        "beyond_right.reject_b_beyond_right",
        "beyond_right.a_corner",
        "beyond_right.a_edge",
        "beyond_right.a_corner_mirrored",
        "corner.reject_b_beyond_top",
        "corner.b_far_side",
        "corner.b_center",
        "corner_far.reject_top_left",
        "corner_far.exit_left_edge",
        "corner_far.reject_bottom_right",
        "corner_far.exit_left",
        "corner_far.exit_bottom",
        "corner_far.enter_top",
        "corner_far.enter_right",
        "corner_center.reject_bottom_right",
        "corner_center.exit_bottom",
        "corner_center.b_inside",
        "corner_center.enter_top",
        "corner_center.enter_right",
        "edge.b_below",
        "edge.b_center",
        "edge.b_above_mirrored",
        "edge_below.reject_bottom_right",
        "edge_below.corner_exit_left",
        "edge_below.corner_exit_bottom",
        "edge_below.edge_exit_bottom",
        "edge_center.exit_left",
        "edge_center.b_inside",
        "inside.b_top_right_corner",
        "inside.b_right_edge",
        "inside.b_bottom_right_corner",
        "inside.b_top_left_corner",
        "inside.b_bottom_left_corner",
        "inside.b_left_edge",
        "inside.b_top_edge",
        "inside.b_bottom_edge",
        "inside.fully_visible",
        "inside_corner.exit_right",
        "inside_corner.exit_top",
    }
)


class BranchRecorder:
    """Counts how often each case-tree branch is taken."""

    def __init__(self) -> None:
        self.counts: dict[str, int] = {}

    def __call__(self, tag: str) -> None:
        self.counts[tag] = self.counts.get(tag, 0) + 1

    def missing(self) -> frozenset[str]:
        return CASE_TREE_BRANCHES - self.counts.keys()


# ---------------------------------------------------------------------------
# Public API.
# ---------------------------------------------------------------------------


def preclip_z(xa, ya, za, xb, yb, zb):
    """Intersect a segment with the half-space z >= 0.

    Returns (t_lo, t_hi, xa', ya', za', xb', yb', zb') describing the
    remaining sub-segment on the original parameterization, or None when
    the segment lies entirely below the plane.  A clipped endpoint is
    placed exactly on z = 0.
    """
    if za >= 0.0:
        if zb >= 0.0:
            return (0.0, 1.0, xa, ya, za, xb, yb, zb)
        t = za / (za - zb)
        return (0.0, t, xa, ya, za, t * (xb - xa) + xa, t * (yb - ya) + ya, 0.0)
    if zb < 0.0:
        return None
    t = za / (za - zb)
    return (t, 1.0, t * (xb - xa) + xa, t * (yb - ya) + ya, 0.0, xb, yb, zb)


def _clip_with_kernel(kernel, segment: Segment3, mode: ClipMode) -> ClipOutcome:
    xa, ya, za, xb, yb, zb = segment.as_tuple()
    if mode is ClipMode.STRICT:
        if za < 0.0 or zb < 0.0:
            raise ValueError("strict mode requires endpoints with z >= 0")
        raw = kernel(xa, ya, za, xb, yb, zb)
        if raw is None:
            return ClipOutcome.rejected()
        return ClipOutcome.accepted(segment, raw[0], raw[1])
    window = preclip_z(xa, ya, za, xb, yb, zb)
    if window is None:
        return ClipOutcome.rejected()
    t_lo, t_hi = window[0], window[1]
    raw = kernel(*window[2:])
    if raw is None:
        return ClipOutcome.rejected()
    span = t_hi - t_lo
    return ClipOutcome.accepted(segment, t_lo + raw[0] * span, t_lo + raw[1] * span)


def clip_pc(segment: Segment3, mode: ClipMode = ClipMode.STRICT) -> ClipOutcome:
    """Clip a segment against the unitary pyramid (region-dispatch clipper)."""
    return _clip_with_kernel(pc_clip, segment, mode)


def clip_pc_recorded(
    segment: Segment3, rec: Recorder, mode: ClipMode = ClipMode.STRICT
) -> ClipOutcome:
    """Reference-build clip with branch recording (tests and coverage)."""

    def kernel(xa, ya, za, xb, yb, zb):
        return pc_clip_reference(xa, ya, za, xb, yb, zb, rec)

    return _clip_with_kernel(kernel, segment, mode)
