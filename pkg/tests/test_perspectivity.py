"""Perspectivities, Desargues machinery, and perspective collineations."""

from fractions import Fraction as F

import pytest

from quadshadow.kernel import Line2, Point2, collinear2, join2, meet2
from quadshadow.quadrangle import Quadrangle
from quadshadow.perspectivity import (
    AXIS_SIDES,
    CenterIsVertex,
    Collineation,
    HomologousSidesEqual,
    InvalidPair,
    NoCommonAxis,
    NotPerspective,
    common_axis,
    desargues_axis,
    general_position,
    pair_perspective_from,
    perspective_center,
    perspective_collineation,
    quad_perspective,
    side_axes,
    triangles_perspective_point,
)

O = Point2.affine(3, 0)
SQUARE = Quadrangle(
    Point2.affine(1, 1),
    Point2.affine(-1, 1),
    Point2.affine(-1, -1),
    Point2.affine(1, -1),
)
DILATED = Quadrangle(
    Point2.affine(-1, 2),
    Point2.affine(-5, 2),
    Point2.affine(-5, -2),
    Point2.affine(-1, -2),
)

# triangles perspective from the origin with ray ratios 2, 3, 4
CENTER = Point2.affine(0, 0)
T1 = (Point2.affine(1, 0), Point2.affine(0, 1), Point2.affine(-1, -1))
T2 = (Point2.affine(2, 0), Point2.affine(0, 3), Point2.affine(-4, -4))


def cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


# --- point perspectivity ------------------------------------------------

def test_pair_perspective_from_is_collinearity():
    assert pair_perspective_from(O, Point2.affine(1, 1), Point2.affine(-1, 2))
    assert not pair_perspective_from(O, Point2.affine(1, 1), Point2.affine(-1, 3))


def test_coincident_homologues_count_as_perspective():
    p = Point2.affine(1, 1)
    assert pair_perspective_from(O, p, p)


def test_quad_perspective_dilation():
    assert quad_perspective(O, SQUARE, DILATED)


def test_quad_perspective_fails_off_ray():
    # (-9, 4) leaves the ray through O and Q; (-9, 3) would stay on it
    moved = Quadrangle(
        Point2.affine(-1, 2),
        Point2.affine(-9, 4),
        Point2.affine(-5, -2),
        Point2.affine(-1, -2),
    )
    assert not quad_perspective(O, SQUARE, moved)


def test_quad_perspective_center_is_vertex():
    with pytest.raises(CenterIsVertex):
        quad_perspective(SQUARE.P, SQUARE, DILATED)


def test_triangles_perspective_point():
    assert triangles_perspective_point(CENTER, T1, T2)
    bent = (T2[0], T2[1], Point2.affine(-4, -5))
    assert not triangles_perspective_point(CENTER, T1, bent)


def test_perspective_center_recovers_center():
    assert perspective_center(T1, T2) == CENTER


def test_perspective_center_not_perspective():
    bent = (T2[0], T2[1], Point2.affine(-4, -5))
    with pytest.raises(NotPerspective):
        perspective_center(T1, bent)


def test_perspective_center_identical_triangles_rejected():
    with pytest.raises(ValueError):
        perspective_center(T1, T1)


# --- Desargues ----------------------------------------------------------

def test_desargues_axis_matches_cross_product_oracle():
    meets = []
    for i, j in ((1, 2), (2, 0), (0, 1)):
        side1 = cross(T1[i].coords, T1[j].coords)
        side2 = cross(T2[i].coords, T2[j].coords)
        meets.append(cross(side1, side2))
    # the three oracle meets are collinear: that is the theorem
    det = (
        meets[0][0] * (meets[1][1] * meets[2][2] - meets[1][2] * meets[2][1])
        - meets[0][1] * (meets[1][0] * meets[2][2] - meets[1][2] * meets[2][0])
        + meets[0][2] * (meets[1][0] * meets[2][1] - meets[1][1] * meets[2][0])
    )
    assert det == 0
    axis = desargues_axis(T1, T2)
    for m in meets:
        assert axis.contains(Point2(*m))


def test_desargues_axis_shared_side_rejected():
    shared = (T1[0], T1[1], Point2.affine(5, 5))
    with pytest.raises(HomologousSidesEqual):
        desargues_axis(T1, shared)


def test_desargues_axis_non_perspective_triangles():
    bent = (T2[0], T2[1], Point2.affine(-4, -5))
    with pytest.raises(NotPerspective):
        desargues_axis(T1, bent)


# --- the four-axis table -------------------------------------------------

def test_axis_sides_table():
    assert AXIS_SIDES == {
        "s": ("QR", "RP", "PQ"),
        "r": ("PQ", "SQ", "SP"),
        "q": ("SP", "RP", "SR"),
        "p": ("SR", "SQ", "QR"),
    }
    # every side appears in exactly two of the four axes
    from collections import Counter

    counts = Counter(side for triple in AXIS_SIDES.values() for side in triple)
    assert all(n == 2 for n in counts.values())


def test_dilation_side_axes_all_ideal():
    axes = side_axes(SQUARE, DILATED)
    ideal = Line2(0, 0, 1)
    assert axes.s == axes.r == axes.q == axes.p == ideal
    assert axes.axis("s") == ideal
    assert common_axis(SQUARE, DILATED) == ideal


def test_side_axes_defining_meets_lie_on_axis():
    axes = side_axes(SQUARE, DILATED)
    for name in AXIS_SIDES:
        for meet in axes.defining_meets(name):
            assert axes.axis(name).contains(meet)


def test_no_common_axis_for_perturbed_quad():
    moved = Quadrangle(
        Point2.affine(-1, 2),
        Point2.affine(-9, 3),
        Point2.affine(-5, -2),
        Point2.affine(-1, -2),
    )
    with pytest.raises(NoCommonAxis):
        common_axis(SQUARE, moved)


def test_general_position_false_for_dilation():
    # parallel side pairs repeat ideal meet directions
    assert not general_position(SQUARE, DILATED)


def test_general_position_true_for_generic_homology():
    axis = Line2(1, 1, 1)
    h = perspective_collineation(O, axis, (Point2.affine(1, 1), Point2.affine(-1, 2)))
    image = h.apply_quadrangle(SQUARE)
    assert quad_perspective(O, SQUARE, image)
    assert general_position(SQUARE, image)
    assert common_axis(SQUARE, image) == axis


def test_general_position_never_raises_on_shared_vertices():
    shared = Quadrangle(SQUARE.P, SQUARE.Q, SQUARE.R, Point2.affine(4, 7))
    assert general_position(SQUARE, shared) is False


# --- collineations -------------------------------------------------------

def test_collineation_canonical_matrix():
    c = Collineation(((2, 0, -6), (0, 2, 0), (0, 0, 2)))
    assert c.matrix == ((1, 0, -3), (0, 1, 0), (0, 0, 1))
    assert Collineation(((-1, 0, 0), (0, -1, 0), (0, 0, -1))) == Collineation.identity()


def test_collineation_singular_rejected():
    with pytest.raises(ValueError):
        Collineation(((1, 2, 3), (2, 4, 6), (0, 0, 1)))


def test_identity_fixes_points_and_lines():
    e = Collineation.identity()
    p = Point2(3, -2, 5)
    line = Line2(1, 4, -2)
    assert e.apply(p) == p
    assert e.apply_line(line) == line


def test_perspective_collineation_dilation_frozen_matrix():
    h = perspective_collineation(
        O, Line2(0, 0, 1), (Point2.affine(1, 1), Point2.affine(-1, 2))
    )
    assert h.matrix == ((2, 0, -3), (0, 2, 0), (0, 0, 1))
    assert h.apply(Point2.affine(-1, 1)) == Point2.affine(-5, 2)
    assert h.apply_quadrangle(SQUARE) == DILATED


def test_perspective_collineation_fixes_center_and_axis():
    axis = Line2(1, 1, 1)
    h = perspective_collineation(O, axis, (Point2.affine(1, 1), Point2.affine(-1, 2)))
    assert h.apply(O) == O
    assert h.apply_line(axis) == axis
    # axis is fixed pointwise
    for x in (Point2.affine(0, -1), Point2.affine(-1, 0), Point2(1, -1, 0)):
        assert axis.contains(x)
        assert h.apply(x) == x
    # lines through the center are fixed linewise
    through = join2(O, Point2.affine(0, 5))
    assert h.apply_line(through) == through


def test_perspective_collineation_equal_pair_is_identity():
    p = Point2.affine(1, 1)
    h = perspective_collineation(O, Line2(1, 1, 1), (p, p))
    assert h == Collineation.identity()


def test_perspective_collineation_invalid_pairs():
    axis = Line2(0, 0, 1)
    with pytest.raises(InvalidPair):
        perspective_collineation(O, axis, (Point2(1, 1, 0), Point2.affine(1, 1)))
    with pytest.raises(InvalidPair):
        perspective_collineation(O, axis, (O, Point2.affine(1, 1)))
    with pytest.raises(InvalidPair):
        perspective_collineation(
            O, axis, (Point2.affine(1, 1), Point2.affine(1, 2))
        )


def test_elation_when_center_on_axis():
    # center on the axis still yields a collineation with the right action
    center = Point2.affine(0, 0)
    axis = Line2(0, 1, 0)  # the x-axis, contains the center
    pair = (Point2.affine(1, 1), Point2.affine(2, 2))
    h = perspective_collineation(center, axis, pair)
    assert h.apply(pair[0]) == pair[1]
    assert h.apply(center) == center
    for x in (Point2.affine(5, 0), Point2(1, 0, 0)):
        assert h.apply(x) == x


def test_collineation_compose_and_inverse():
    h = perspective_collineation(
        O, Line2(0, 0, 1), (Point2.affine(1, 1), Point2.affine(-1, 2))
    )
    assert h.compose(h.inverse()) == Collineation.identity()
    p = Point2.affine(-7, 4)
    assert h.inverse().apply(h.apply(p)) == p


def test_collineation_preserves_incidence():
    h = perspective_collineation(
        O, Line2(1, 1, 1), (Point2.affine(1, 1), Point2.affine(-1, 2))
    )
    a, b = Point2.affine(2, 5), Point2.affine(-3, 1)
    line = join2(a, b)
    assert h.apply_line(line) == join2(h.apply(a), h.apply(b))


def test_collineation_line_action_via_meets():
    h = perspective_collineation(
        O, Line2(0, 0, 1), (Point2.affine(1, 1), Point2.affine(-1, 2))
    )
    l1, l2 = Line2(1, 0, -1), Line2(0, 1, -1)
    assert h.apply(meet2(l1, l2)) == meet2(h.apply_line(l1), h.apply_line(l2))
