from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from pqlab.geometry import (
    ConvexBody,
    Point,
    candidate_points,
    common_intersection,
    common_point,
    convex_hull,
    format_rational,
    intersect,
    parse_rational,
    pt,
)
from pqlab.instances import crossing_segments


def test_rational_round_trip():
    for v in [Fraction(0), Fraction(-3, 7), Fraction(5), Fraction(10**20, 3)]:
        assert parse_rational(format_rational(v)) == v
    assert format_rational(Fraction(2)) == "2/1"
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_hull_drops_collinear_and_interior_points():
    pts = [pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1)]
    assert convex_hull(pts) == (pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2))


def test_body_kinds(unit_box):
    assert unit_box.kind == "polygon"
    assert ConvexBody.segment((0, 0), (1, 1)).kind == "segment"
    assert ConvexBody.hull_of([(3, 3)]).kind == "point"
    assert ConvexBody.hull_of([(0, 0), (1, 1), (2, 2)]).kind == "segment"


def test_contains_is_closed(unit_box):
    assert unit_box.contains(pt(1, 1))
    assert unit_box.on_boundary(pt(1, Fraction(1, 2)))
    assert not unit_box.interior_contains(pt(1, Fraction(1, 2)))
    assert unit_box.interior_contains(pt(Fraction(1, 2), Fraction(1, 2)))
    assert not unit_box.contains(pt(Fraction(11, 10), 0))


def test_touching_boxes_meet_in_a_segment():
    a, b = ConvexBody.box(0, 0, 1, 1), ConvexBody.box(1, 0, 2, 1)
    inter = intersect(a, b)
    assert inter is not None and inter.kind == "segment"
    assert set(inter.vertices) == {pt(1, 0), pt(1, 1)}


def test_corner_contact_is_a_point():
    a, b = ConvexBody.box(0, 0, 1, 1), ConvexBody.box(1, 1, 2, 2)
    assert intersect(a, b).vertices == (pt(1, 1),)


def test_disjoint_segments():
    a = ConvexBody.segment((0, 0), (1, 0))
    b = ConvexBody.segment((0, 1), (1, 1))
    assert intersect(a, b) is None
    assert common_point([a, b]) is None


def test_crossing_segments_meet_at_exact_point():
    a = ConvexBody.segment((0, 0), (3, 1))
    b = ConvexBody.segment((0, 1), (3, 0))
    assert intersect(a, b).vertices == (pt(Fraction(3, 2), Fraction(1, 2)),)


def test_candidate_count_brute_force():
    # 4 segments in general position, all crossing: 8 endpoints + 6 crossings
    fam = crossing_segments(4, seed=3)
    assert len(candidate_points(fam.bodies)) == 2 * 4 + comb(4, 2)


@pytest.mark.parametrize("n", [2, 3, 5, 6])
def test_candidate_count_general_segments(n):
    fam = crossing_segments(n, seed=n)
    assert len(candidate_points(fam.bodies)) == 2 * n + comb(n, 2)


coords = st.integers(-6, 6)
point_lists = st.lists(st.tuples(coords, coords), min_size=1, max_size=5)


@st.composite
def bodies(draw):
    return ConvexBody.hull_of(draw(point_lists))


@given(bodies(), bodies())
def test_intersect_commutes(a, b):
    ab, ba = intersect(a, b), intersect(b, a)
    assert (ab is None) == (ba is None)
    if ab is not None:
        assert set(ab.vertices) == set(ba.vertices)


@given(bodies())
def test_intersect_idempotent(a):
    assert set(intersect(a, a).vertices) == set(a.vertices)


@given(st.lists(bodies(), min_size=1, max_size=4))
def test_candidates_witness_every_nonempty_intersection(bs):
    """If some subset has a common point, a candidate point lies in all of them."""
    cands = candidate_points(bs)
    for k in range(1, len(bs) + 1):
        for sub in combinations(bs, k):
            has_common = common_intersection(list(sub)) is not None
            witnessed = any(all(b.contains(c) for b in sub) for c in cands)
            assert has_common == witnessed


@given(bodies(), bodies())
def test_common_point_lies_in_both(a, b):
    p = common_point([a, b])
    if p is not None:
        assert isinstance(p, Point) and a.contains(p) and b.contains(p)
