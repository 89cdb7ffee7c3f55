from fractions import Fraction
from math import comb

import pytest

from pqlab.clique import (
    approx_max_clique,
    check_union_condition,
    lemma32_check,
    lemma33_check,
    union_complexity,
)
from pqlab.errors import PreconditionError
from pqlab.family import Family
from pqlab.geometry import ConvexBody, pt
from pqlab.instances import concentric, crossing_segments, disjoint, five_cycle_segments, triangle_sides


def test_union_complexity_small_cases():
    assert union_complexity(disjoint(2)).vertex_count == 0
    assert union_complexity(crossing_segments(2, 0)).vertex_count == 1
    assert union_complexity(crossing_segments(3, 0)).vertex_count == 3


def test_reported_vertices_reverify():
    fam = crossing_segments(5, 4, width=Fraction(1, 2))
    rep = union_complexity(fam)
    for v in rep.vertices:
        assert sum(b.on_boundary(v) for b in fam) >= 2
        assert not any(b.interior_contains(v) for b in fam)


def test_union_condition():
    res = check_union_condition(crossing_segments(4, 1), 4)
    assert not res.holds and res.witness == (0, 1, 2, 3)
    assert check_union_condition(concentric(4), 4).holds
    assert check_union_condition(disjoint(4), 3).holds
    with pytest.raises(PreconditionError):
        check_union_condition(concentric(4), 2)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_lemma33_tight_on_segments(k):
    rec = lemma33_check(crossing_segments(k, k))
    assert rec.union_complexity == comb(k, 2) and rec.tight


def test_lemma33_thin_rectangles_exceed():
    rec = lemma33_check(crossing_segments(4, 0, width=Fraction(1, 4)))
    assert rec.union_complexity > 6


def test_lemma33_precondition():
    with pytest.raises(PreconditionError):
        lemma33_check(concentric(4))


def test_clique_examples():
    rep = approx_max_clique(concentric(4))
    assert len(rep.approx_clique) == 4 and rep.ratio == 1
    rep = approx_max_clique(five_cycle_segments())
    assert len(rep.approx_clique) == 2 == rep.exact_clique_size
    rep = approx_max_clique(triangle_sides())
    assert len(rep.approx_clique) == 2 and rep.exact_clique_size == 3
    assert rep.ratio == Fraction(2, 3)
    assert all(triangle_sides().by_id(i).contains(rep.witness_point) for i in rep.approx_clique)


def test_lemma32_concurrent_segments():
    segs = [ConvexBody.segment((-1, -i), (1, i)) for i in range(1, 4)] + [ConvexBody.segment((0, -1), (0, 1))]
    rec = lemma32_check(Family.of(segs), 2, 3)
    assert rec.smallest_m == 3 and rec.implication_holds


def test_lemma32_triangle_example_violates_precondition():
    # triangle sides plus a segment through a corner: the sides alone are an
    # exactly-2-intersecting triple, so k = 3 is excluded by the hypothesis
    extra = ConvexBody.segment((-1, -1), (2, 2))
    fam = Family.of(list(triangle_sides()) + [extra])
    with pytest.raises(PreconditionError):
        lemma32_check(fam, 2, 3)


def test_lemma32_triangle_example_k4():
    extra = ConvexBody.segment((0, 0), (3, 3))  # through corner (0,0), reaching side x + y = 4
    fam = Family.of(list(triangle_sides()) + [extra])
    rec = lemma32_check(fam, 2, 4)
    assert rec.smallest_m == 4 and rec.instance_ramsey == 4


def test_lemma32_needs_p2():
    with pytest.raises(PreconditionError):
        lemma32_check(disjoint(4), 2, 3)
