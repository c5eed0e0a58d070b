"""Algebraic invariants checked over randomized inputs."""

from fractions import Fraction

from hypothesis import given, strategies as st

from quadshadow.kernel import (
    Line2,
    Point2,
    Point3,
    chart_drawing,
    embed_drawing,
    join2,
    line3_through,
    meet2,
    meet_lines3,
    normalize,
)

coord = st.integers(min_value=-40, max_value=40)
scale = st.builds(
    Fraction,
    st.integers(min_value=-12, max_value=12).filter(lambda n: n != 0),
    st.integers(min_value=1, max_value=12),
)


def nonzero_triple(draw_filter=lambda t: any(t)):
    return st.tuples(coord, coord, coord).filter(draw_filter)


@given(nonzero_triple())
def test_normalize_is_idempotent(t):
    once = normalize(t)
    assert normalize(once) == once


@given(nonzero_triple(), scale)
def test_normalize_kills_scalar_factors(t, k):
    assert Point2(*(k * c for c in t)) == Point2(*t)


@given(nonzero_triple(), nonzero_triple())
def test_join_passes_through_both_points(t, u):
    p, q = Point2(*t), Point2(*u)
    if p == q:
        return
    l = join2(p, q)
    assert l.contains(p) and l.contains(q)


@given(nonzero_triple(), nonzero_triple())
def test_meet_lies_on_both_lines(t, u):
    l, m = Line2(*t), Line2(*u)
    if l == m:
        return
    x = meet2(l, m)
    assert l.contains(x) and m.contains(x)


@given(nonzero_triple(), nonzero_triple())
def test_join_meet_duality(t, u):
    p, q = Point2(*t), Point2(*u)
    if p == q:
        return
    l = join2(p, q)
    m = Line2(*u) if Line2(*u) != l else Line2(1, 1, 1)
    if m == l:
        m = Line2(1, 0, 1)
    assert join2(meet2(l, m), p) == l or meet2(l, m) == p


quad_coord = st.tuples(coord, coord, coord, coord).filter(lambda t: any(t))


@given(quad_coord, quad_coord)
def test_pluecker_relation(a, b):
    x, y = Point3(*a), Point3(*b)
    if x == y:
        return
    p = line3_through(x, y).pluecker
    assert p[0] * p[3] + p[1] * p[4] + p[2] * p[5] == 0


@given(quad_coord, quad_coord, quad_coord)
def test_meet_lines3_incidence(a, b, c):
    x, y, z = Point3(*a), Point3(*b), Point3(*c)
    if len({x, y, z}) < 3:
        return
    l1 = line3_through(x, y)
    l2 = line3_through(x, z)
    if l1 == l2:
        return
    m = meet_lines3(l1, l2)
    assert m is not None
    assert l1.contains(m) and l2.contains(m)


@given(nonzero_triple())
def test_embed_chart_round_trip(t):
    p = Point2(*t)
    assert chart_drawing(embed_drawing(p)) == p
