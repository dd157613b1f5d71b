"""Core geometry for the unitary viewing pyramid.

The clipping region is the infinite four-sided pyramid

    -z <= x <= z,   -z <= y <= z,   z >= 0

with apex at the origin.  Each face is expressed as a signed linear
functional that is zero on the face and positive on the inside; every
boundary test and intersection parameter in the package is derived from
these four functionals.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union


class Boundary(enum.Enum):
    """One face plane of the pyramid."""

    RIGHT = "right"    # x = -z
    LEFT = "left"      # x = z
    BOTTOM = "bottom"  # y = -z
    TOP = "top"        # y = z


class XClass(enum.Enum):
    """Location of a point relative to the two x-boundaries."""

    BEYOND_RIGHT = "beyond_right"  # x < -z, strict
    BETWEEN = "between"            # -z <= x <= z
    BEYOND_LEFT = "beyond_left"    # x > z, strict


class YClass(enum.Enum):
    """Location of a point relative to the two y-boundaries."""

    BEYOND_TOP = "beyond_top"        # y > z, strict
    BETWEEN = "between"              # -z <= y <= z
    BEYOND_BOTTOM = "beyond_bottom"  # y < -z, strict


class PyramidEdge(enum.Enum):
    """One of the four edges where two face planes meet.

    Each edge is a line through the origin; the direction vectors are
    TOP_LEFT (1,1,1), TOP_RIGHT (-1,1,1), BOTTOM_RIGHT (-1,-1,1),
    BOTTOM_LEFT (1,-1,1).
    """

    TOP_LEFT = "top_left"          # left & top faces
    TOP_RIGHT = "top_right"        # right & top faces
    BOTTOM_RIGHT = "bottom_right"  # right & bottom faces
    BOTTOM_LEFT = "bottom_left"    # left & bottom faces


# Ordered functional pair (f, g) defining the side-of-plane determinant
# f(a)*g(d) - g(a)*f(d) for the plane through a point and the edge.
_EDGE_FUNCTIONALS = {
    PyramidEdge.TOP_LEFT: (Boundary.LEFT, Boundary.TOP),
    PyramidEdge.TOP_RIGHT: (Boundary.RIGHT, Boundary.TOP),
    PyramidEdge.BOTTOM_RIGHT: (Boundary.RIGHT, Boundary.BOTTOM),
    PyramidEdge.BOTTOM_LEFT: (Boundary.LEFT, Boundary.BOTTOM),
}

EDGE_DIRECTIONS = {
    PyramidEdge.TOP_LEFT: (1.0, 1.0, 1.0),
    PyramidEdge.TOP_RIGHT: (-1.0, 1.0, 1.0),
    PyramidEdge.BOTTOM_RIGHT: (-1.0, -1.0, 1.0),
    PyramidEdge.BOTTOM_LEFT: (1.0, -1.0, 1.0),
}


@dataclass(frozen=True)
class Point3:
    """A point in E3.  Coordinates must be finite."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)):
            raise ValueError(f"non-finite coordinate in point ({self.x}, {self.y}, {self.z})")


@dataclass(frozen=True)
class Delta3:
    """Difference vector of a segment: (b.x - a.x, b.y - a.y, b.z - a.z)."""

    dx: float
    dy: float
    dz: float


@dataclass(frozen=True)
class Segment3:
    """A line segment from ``a`` to ``b``; ``a == b`` is permitted."""

    a: Point3
    b: Point3

    @property
    def delta(self) -> Delta3:
        return Delta3(self.b.x - self.a.x, self.b.y - self.a.y, self.b.z - self.a.z)

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (self.a.x, self.a.y, self.a.z, self.b.x, self.b.y, self.b.z)


@dataclass(frozen=True)
class Region:
    """One of the 9 regions of the positive half-space.

    Exactly one region is the inside; four regions violate one of the
    x/y constraints (edge regions) and four violate both (corner
    regions).  Points exactly on a boundary classify as BETWEEN, so the
    regions partition the half-space.
    """

    xclass: XClass
    yclass: YClass

    @property
    def is_inside(self) -> bool:
        return self.xclass is XClass.BETWEEN and self.yclass is YClass.BETWEEN

    @property
    def is_edge(self) -> bool:
        return (self.xclass is XClass.BETWEEN) != (self.yclass is YClass.BETWEEN)

    @property
    def is_corner(self) -> bool:
        return self.xclass is not XClass.BETWEEN and self.yclass is not YClass.BETWEEN


# The nine regions, by name, for tests and case specifications.
INSIDE = Region(XClass.BETWEEN, YClass.BETWEEN)
RIGHT_EDGE = Region(XClass.BEYOND_RIGHT, YClass.BETWEEN)
LEFT_EDGE = Region(XClass.BEYOND_LEFT, YClass.BETWEEN)
TOP_EDGE = Region(XClass.BETWEEN, YClass.BEYOND_TOP)
BOTTOM_EDGE = Region(XClass.BETWEEN, YClass.BEYOND_BOTTOM)
TOP_RIGHT_CORNER = Region(XClass.BEYOND_RIGHT, YClass.BEYOND_TOP)
TOP_LEFT_CORNER = Region(XClass.BEYOND_LEFT, YClass.BEYOND_TOP)
BOTTOM_RIGHT_CORNER = Region(XClass.BEYOND_RIGHT, YClass.BEYOND_BOTTOM)
BOTTOM_LEFT_CORNER = Region(XClass.BEYOND_LEFT, YClass.BEYOND_BOTTOM)

ALL_REGIONS = (
    INSIDE,
    RIGHT_EDGE,
    LEFT_EDGE,
    TOP_EDGE,
    BOTTOM_EDGE,
    TOP_RIGHT_CORNER,
    TOP_LEFT_CORNER,
    BOTTOM_RIGHT_CORNER,
    BOTTOM_LEFT_CORNER,
)


def _xyz(p: Union[Point3, Delta3]) -> tuple[float, float, float]:
    if isinstance(p, Delta3):
        return p.dx, p.dy, p.dz
    return p.x, p.y, p.z


def boundary_functional(p: Union[Point3, Delta3], boundary: Boundary) -> float:
    """Signed linear form for one pyramid face.

    RIGHT -> x + z, LEFT -> z - x, BOTTOM -> y + z, TOP -> z - y.
    Zero on the face, positive on the inside.  Linear, so it applies to
    difference vectors as well as points; a point with z >= 0 is inside
    the pyramid iff all four functionals are >= 0.
    """
    x, y, z = _xyz(p)
    if boundary is Boundary.RIGHT:
        return x + z
    if boundary is Boundary.LEFT:
        return z - x
    if boundary is Boundary.BOTTOM:
        return y + z
    return z - y


def point_inside(p: Point3) -> bool:
    """Inclusive membership test: z >= 0 and all four functionals >= 0."""
    return (
        p.z >= 0.0
        and p.x + p.z >= 0.0
        and p.z - p.x >= 0.0
        and p.y + p.z >= 0.0
        and p.z - p.y >= 0.0
    )


def classify_region(p: Point3) -> Region:
    """Classify a point of the positive half-space into one of 9 regions.

    "Beyond" tests are strict, membership is inclusive: a point exactly
    on a boundary plane classifies as BETWEEN.

    Raises ValueError if ``p.z < 0`` (callers must pre-clip against the
    half-space first).
    """
    if p.z < 0.0:
        raise ValueError(f"point below the z=0 plane cannot be classified: z={p.z}")
    if p.x < -p.z:
        xclass = XClass.BEYOND_RIGHT
    elif p.x > p.z:
        xclass = XClass.BEYOND_LEFT
    else:
        xclass = XClass.BETWEEN
    if p.y > p.z:
        yclass = YClass.BEYOND_TOP
    elif p.y < -p.z:
        yclass = YClass.BEYOND_BOTTOM
    else:
        yclass = YClass.BETWEEN
    return Region(xclass, yclass)


def edge_plane_side(a: Point3, d: Delta3, edge: PyramidEdge) -> int:
    """Side of the plane through point ``a`` and a pyramid edge.

    With (f, g) the ordered functional pair of the edge, returns the
    sign of the 2x2 determinant f(a)*g(d) - g(a)*f(d).  The determinant
    equals h(a + d) for the linear form h(p) = f(a)*g(p) - g(a)*f(p),
    which vanishes on the edge and at ``a`` -- i.e. it is the
    side-of-plane test for the plane spanned by ``a`` and the edge.

    Returns -1, 0 or +1.
    """
    f, g = _EDGE_FUNCTIONALS[edge]
    det = boundary_functional(a, f) * boundary_functional(d, g) - boundary_functional(
        a, g
    ) * boundary_functional(d, f)
    if det > 0.0:
        return 1
    if det < 0.0:
        return -1
    return 0


def boundary_parameter(a: Point3, d: Delta3, boundary: Boundary) -> float:
    """Parameter t at which the line a + t*d crosses a face plane.

    t = -f(a) / f(d) for the face functional f; the point a + t*d then
    satisfies f = 0 exactly (up to rounding).  Raises ZeroDivisionError
    when the direction is parallel to the face (f(d) == 0); the clipper
    case preconditions guarantee this never happens on its call sites.
    """
    fd = boundary_functional(d, boundary)
    if fd == 0.0:
        raise ZeroDivisionError(f"direction parallel to the {boundary.value} boundary")
    return -boundary_functional(a, boundary) / fd


def eval_segment(s: Segment3, t: float) -> Point3:
    """Point at parameter t on P(t) = a + t*(b - a)."""
    d = s.delta
    return Point3(t * d.dx + s.a.x, t * d.dy + s.a.y, t * d.dz + s.a.z)


def rotate_quarter(p: Point3, k: int) -> Point3:
    """Rotate (x, y) by k quarter turns about the z axis.

    k=1 maps (x, y, z) -> (-y, x, z); the pyramid is invariant and the
    boundary roles permute cyclically RIGHT -> BOTTOM -> LEFT -> TOP.
    """
    k &= 3
    if k == 0:
        return p
    if k == 1:
        return Point3(-p.y, p.x, p.z)
    if k == 2:
        return Point3(-p.x, -p.y, p.z)
    return Point3(p.y, -p.x, p.z)


def reflect_y(p: Point3) -> Point3:
    """Mirror across the y=0 plane: (x, y, z) -> (x, -y, z).

    Preserves the pyramid; swaps the TOP/BOTTOM boundary roles and the
    TOP_LEFT/BOTTOM_LEFT and TOP_RIGHT/BOTTOM_RIGHT edge roles.
    """
    return Point3(p.x, -p.y, p.z)
