import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pyraclip.geometry import (
    ALL_REGIONS,
    BOTTOM_EDGE,
    Boundary,
    Delta3,
    INSIDE,
    LEFT_EDGE,
    Point3,
    PyramidEdge,
    RIGHT_EDGE,
    Region,
    Segment3,
    TOP_EDGE,
    TOP_RIGHT_CORNER,
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

grid_coord = st.integers(-8192, 8192).map(lambda m: m / 1024.0)
grid_zpos = st.integers(0, 8192).map(lambda m: m / 1024.0)


def grid_point():
    return st.builds(Point3, grid_coord, grid_coord, grid_zpos)


def grid_delta():
    return st.builds(Delta3, grid_coord, grid_coord, grid_coord)


def test_boundary_functional_examples():
    assert boundary_functional(Point3(0, 0, 1), Boundary.RIGHT) == 1.0
    assert boundary_functional(Point3(-1, 0, 1), Boundary.RIGHT) == 0.0
    assert boundary_functional(Point3(-2, 3, 1), Boundary.TOP) == -2.0


def test_boundary_functional_applies_to_deltas():
    d = Delta3(3.0, -4.0, 1.0)
    assert boundary_functional(d, Boundary.RIGHT) == 4.0
    assert boundary_functional(d, Boundary.LEFT) == -2.0
    assert boundary_functional(d, Boundary.BOTTOM) == -3.0
    assert boundary_functional(d, Boundary.TOP) == 5.0


@pytest.mark.parametrize(
    "point,region",
    [
        (Point3(0, 0, 1), INSIDE),
        (Point3(-2, 0, 1), RIGHT_EDGE),
        (Point3(-2, 3, 1), TOP_RIGHT_CORNER),
        (Point3(1, 1, 1), INSIDE),  # points on boundaries are inside
    ],
)
def test_classify_region_examples(point, region):
    assert classify_region(point) == region


def test_classify_region_rejects_negative_z():
    with pytest.raises(ValueError):
        classify_region(Point3(0.0, 0.0, -0.5))


def test_point3_rejects_non_finite():
    with pytest.raises(ValueError):
        Point3(float("nan"), 0.0, 1.0)
    with pytest.raises(ValueError):
        Point3(0.0, float("inf"), 1.0)


def test_edge_plane_side_examples():
    # hand-expanded determinant l(a)*t(d) - t(a)*l(d) = 3*5 - (-2)*(-2) = 11
    assert edge_plane_side(Point3(-2, 3, 1), Delta3(3, -4, 1), PyramidEdge.TOP_LEFT) == 1
    # r(a)=1, t(a)=1, r(d)=1, t(d)=0 -> 1*0 - 1*1 = -1
    assert edge_plane_side(Point3(0, 0, 1), Delta3(1, 0, 0), PyramidEdge.TOP_RIGHT) == -1


def test_edge_plane_side_zero_for_coplanar_direction():
    # direction from an edge point to a lies in the plane through a and the edge
    a = Point3(-2.0, 3.0, 1.0)
    edge_point = (1.0, 1.0, 1.0)  # on the top-left edge
    d = Delta3(a.x - edge_point[0], a.y - edge_point[1], a.z - edge_point[2])
    assert edge_plane_side(a, d, PyramidEdge.TOP_LEFT) == 0


def test_boundary_parameter_examples():
    assert boundary_parameter(Point3(0, 0, 1), Delta3(-3, 0, 0), Boundary.RIGHT) == pytest.approx(
        1 / 3, abs=0
    )
    # a on the boundary: parameter is zero
    assert boundary_parameter(Point3(-1, 0, 1), Delta3(2, 0, 0), Boundary.RIGHT) == 0.0
    assert boundary_parameter(Point3(-2, 0, 1), Delta3(4, 0, 0), Boundary.LEFT) == 0.75


def test_boundary_parameter_degenerate_denominator():
    with pytest.raises(ZeroDivisionError):
        boundary_parameter(Point3(0, 0, 1), Delta3(1, 0, -1), Boundary.RIGHT)


def test_eval_segment_endpoints_and_interior():
    s = Segment3(Point3(0, 0, 1), Point3(-3, 0, 1))
    assert eval_segment(s, 0.0) == s.a
    assert eval_segment(s, 1.0) == s.b
    assert eval_segment(s, 1 / 3) == Point3(-1, 0, 1)


def test_rotate_quarter_examples():
    assert rotate_quarter(Point3(1, 0, 1), 0) == Point3(1, 0, 1)
    assert rotate_quarter(Point3(1, 0, 1), 1) == Point3(0, 1, 1)
    assert rotate_quarter(Point3(1, 2, 3), 2) == Point3(-1, -2, 3)
    assert rotate_quarter(Point3(1, 2, 3), 5) == rotate_quarter(Point3(1, 2, 3), 1)


def test_region_kind_flags():
    assert INSIDE.is_inside and not INSIDE.is_edge and not INSIDE.is_corner
    assert RIGHT_EDGE.is_edge and not RIGHT_EDGE.is_inside
    assert TOP_RIGHT_CORNER.is_corner and not TOP_RIGHT_CORNER.is_edge
    assert len(ALL_REGIONS) == 9
    assert len(set(ALL_REGIONS)) == 9


@given(grid_point())
def test_membership_matches_classification(p):
    all_nonneg = all(boundary_functional(p, b) >= 0.0 for b in Boundary)
    assert (classify_region(p) == INSIDE) == all_nonneg
    assert point_inside(p) == all_nonneg


@given(
    st.builds(Point3, *(st.floats(-1e6, 1e6) for _ in range(3))),
    st.builds(Delta3, *(st.floats(-1e6, 1e6) for _ in range(3))),
    st.floats(-1e6, 1e6),
    st.sampled_from(list(Boundary)),
)
def test_functional_linearity(a, d, t, b):
    moved = Point3(a.x + t * d.dx, a.y + t * d.dy, a.z + t * d.dz)
    lhs = boundary_functional(moved, b)
    rhs = boundary_functional(a, b) + t * boundary_functional(d, b)
    scale = max(
        1.0,
        abs(a.x), abs(a.y), abs(a.z),
        abs(t * d.dx), abs(t * d.dy), abs(t * d.dz),
    )
    assert abs(lhs - rhs) <= 4 * math.ulp(scale)


@given(grid_point(), grid_delta(), st.sampled_from(list(Boundary)))
def test_boundary_parameter_lands_on_boundary(a, d, b):
    fd = boundary_functional(d, b)
    if fd == 0.0:
        return
    t = boundary_parameter(a, d, b)
    landed = Point3(a.x + t * d.dx, a.y + t * d.dy, a.z + t * d.dz)
    norm_a = abs(a.x) + abs(a.y) + abs(a.z)
    norm_d = abs(d.dx) + abs(d.dy) + abs(d.dz)
    assert abs(boundary_functional(landed, b)) <= 1e-9 * (1.0 + norm_a + norm_d)


# Quarter turn permutes the boundary roles RIGHT -> BOTTOM -> LEFT -> TOP.
_X_AFTER_TURN = {
    YClass.BEYOND_BOTTOM: XClass.BEYOND_LEFT,
    YClass.BETWEEN: XClass.BETWEEN,
    YClass.BEYOND_TOP: XClass.BEYOND_RIGHT,
}
_Y_AFTER_TURN = {
    XClass.BEYOND_RIGHT: YClass.BEYOND_BOTTOM,
    XClass.BETWEEN: YClass.BETWEEN,
    XClass.BEYOND_LEFT: YClass.BEYOND_TOP,
}


@given(grid_point())
def test_rotation_equivariance_of_classification(p):
    region = classify_region(p)
    turned = classify_region(rotate_quarter(p, 1))
    assert turned == Region(_X_AFTER_TURN[region.yclass], _Y_AFTER_TURN[region.xclass])


@given(grid_point(), st.sampled_from(list(Boundary)))
def test_functional_of_rotation_is_permuted_functional(p, b):
    # f_RIGHT(turned p) == f_TOP(p), etc., exactly: rotation only permutes
    # and negates coordinates.
    successor = {
        Boundary.RIGHT: Boundary.TOP,
        Boundary.BOTTOM: Boundary.RIGHT,
        Boundary.LEFT: Boundary.BOTTOM,
        Boundary.TOP: Boundary.LEFT,
    }
    assert boundary_functional(rotate_quarter(p, 1), b) == boundary_functional(
        p, successor[b]
    )


@given(grid_point(), st.integers(-20, 20), st.sampled_from(list(Boundary)))
def test_homogeneity_exact_for_power_of_two_scales(p, k, b):
    lam = 2.0**k
    scaled = Point3(lam * p.x, lam * p.y, lam * p.z)
    assert boundary_functional(scaled, b) == lam * boundary_functional(p, b)
    assert classify_region(scaled) == classify_region(p)


@given(
    grid_point(),
    st.floats(1e-3, 1e3, exclude_min=True),
    st.sampled_from(list(Boundary)),
)
def test_homogeneity_approximate_for_general_scales(p, lam, b):
    scaled = Point3(lam * p.x, lam * p.y, lam * p.z)
    lhs = boundary_functional(scaled, b)
    rhs = lam * boundary_functional(p, b)
    assert abs(lhs - rhs) <= 4 * math.ulp(max(1e-12, abs(rhs), abs(lhs)))


@given(grid_point(), grid_delta(), st.sampled_from(list(PyramidEdge)))
def test_edge_plane_side_antisymmetry(a, d, e):
    from pyraclip.geometry import _EDGE_FUNCTIONALS

    f, g = _EDGE_FUNCTIONALS[e]
    det = boundary_functional(a, f) * boundary_functional(d, g) - boundary_functional(
        a, g
    ) * boundary_functional(d, f)
    swapped = boundary_functional(a, g) * boundary_functional(d, f) - boundary_functional(
        a, f
    ) * boundary_functional(d, g)
    sign = (det > 0) - (det < 0)
    swapped_sign = (swapped > 0) - (swapped < 0)
    assert sign == -swapped_sign
    assert edge_plane_side(a, d, e) == sign


@given(grid_point())
def test_reflect_y_swaps_top_bottom_roles(p):
    q = reflect_y(p)
    assert boundary_functional(q, Boundary.TOP) == boundary_functional(p, Boundary.BOTTOM)
    assert boundary_functional(q, Boundary.LEFT) == boundary_functional(p, Boundary.LEFT)


def test_segment_delta_and_tuple():
    s = Segment3(Point3(1, 2, 3), Point3(4, 6, 8))
    assert s.delta == Delta3(3.0, 4.0, 5.0)
    assert s.as_tuple() == (1, 2, 3, 4, 6, 8)
