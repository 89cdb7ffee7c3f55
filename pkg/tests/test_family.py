from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from pqlab.errors import Budget, BudgetExceeded, PreconditionError
from pqlab.family import (
    Family,
    deepest_point,
    dichotomy_split,
    find_exactly_two_intersecting,
    has_pq_property,
    intersection_graph,
    max_clique_exact,
    tuple_stats,
)
from pqlab.geometry import ConvexBody, common_intersection
from pqlab.instances import (
    concentric,
    crossing_segments,
    five_cycle_segments,
    random_polygons,
    segments_plus_boxes,
    triangle_sides,
)


def brute_pq(fam, p, q):
    bodies = fam.bodies
    for sub in combinations(bodies, p):
        if not any(common_intersection(list(t)) is not None for t in combinations(sub, q)):
            return False
    return True


def test_family_rejects_duplicate_ids():
    b = ConvexBody.box(0, 0, 1, 1)
    with pytest.raises(ValueError):
        Family((b, b))


def test_triangle_sides_meet_pairwise_at_corners():
    fam = triangle_sides()
    graph = intersection_graph(fam)
    assert all(len(v) == 2 for v in graph.values())
    stats = tuple_stats(fam, 3)
    assert stats.f == (3, 3, 0)
    assert stats.helly_residue_r == 0


def test_five_cycle_graph():
    graph = intersection_graph(five_cycle_segments())
    for i in range(5):
        assert graph[i] == frozenset({(i - 1) % 5, (i + 1) % 5})


def test_f_vector_of_crossing_segments():
    stats = tuple_stats(crossing_segments(4, seed=1), 4)
    assert stats.f == (4, 6, 0, 0)
    # no triple meets, so f[2] == 0 already and the residue is 0
    assert stats.helly_residue_r == 0


def test_residue_undefined_when_k_max_too_small():
    stats = tuple_stats(concentric(5), 3)
    assert stats.f == (5, 10, 10) and stats.helly_residue_r is None


def test_concentric_all_tuples_meet():
    stats = tuple_stats(concentric(5), 5)
    assert stats.f == (5, 10, 10, 5, 1)
    # the first vanishing count is for 6-tuples, f[2 + 3]
    assert stats.helly_residue_r == 3


def test_pq_on_segments():
    fam = crossing_segments(5, seed=2)
    assert has_pq_property(fam, 3, 2).holds
    dec = has_pq_property(fam, 3, 3)
    assert not dec.holds and dec.counterexample == (0, 1, 2)


def test_pq_preconditions():
    fam = concentric(3)
    with pytest.raises(PreconditionError):
        has_pq_property(fam, 4, 2)
    with pytest.raises(PreconditionError):
        has_pq_property(fam, 2, 3)


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        has_pq_property(random_polygons(10, 1, grid=6), 6, 3, Budget(5))


@pytest.mark.parametrize("seed", range(6))
def test_pq_matches_brute_force(seed):
    fam = random_polygons(7, seed, grid=10, radius=4, vertices=4)
    for p in range(2, 6):
        for q in range(2, p + 1):
            assert has_pq_property(fam, p, q).holds == brute_pq(fam, p, q)


@given(st.integers(0, 40), st.integers(3, 6))
def test_pq_monotone_in_p(seed, n):
    # (p,q) implies (p+1,q)
    fam = random_polygons(n, seed, grid=8, radius=4, vertices=3)
    for q in (2, 3):
        for p in range(q, n):
            if has_pq_property(fam, p, q).holds:
                assert has_pq_property(fam, p + 1, q).holds


def test_dichotomy_splits_off_disjoint_segments():
    segs = [ConvexBody.segment((3 * i, 0), (3 * i, 1), i) for i in range(3)]
    boxes = [ConvexBody.box(-1 - j, -1 - j, 8 + j, 2 + j, 3 + j) for j in range(4)]
    fam = Family(tuple(segs + boxes))
    assert has_pq_property(fam, 7, 4).holds
    res = dichotomy_split(fam, 7, 4, 3, 2)
    assert res.branch == "right"
    assert res.subfamily == (0, 1, 2)
    assert res.residual == (4, 3)


def test_dichotomy_left_branch():
    res = dichotomy_split(concentric(5), 4, 3, 2, 2)
    assert res.branch == "left" and res.subfamily is None


def test_dichotomy_precondition():
    with pytest.raises(PreconditionError):
        dichotomy_split(concentric(5), 4, 3, 4, 2)


def test_exactly_two_intersecting():
    assert find_exactly_two_intersecting(crossing_segments(5, 0), 5) is not None
    assert find_exactly_two_intersecting(concentric(4), 3) is None


def test_max_clique_tie_breaks_lexicographically():
    graph = intersection_graph(five_cycle_segments())
    assert max_clique_exact(graph) == (0, 1)


def test_deepest_point_in_concentric():
    point, ids = deepest_point(concentric(4))
    assert ids == (0, 1, 2, 3)
    assert all(b.contains(point) for b in concentric(4))


def test_segments_plus_boxes_property():
    fam = segments_plus_boxes(5, 3, seed=2)
    assert has_pq_property(fam, 5, 3).holds
