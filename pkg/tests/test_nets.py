from fractions import Fraction
from itertools import combinations

import pytest

from pqlab.errors import BudgetExceeded, PreconditionError
from pqlab.geometry import convex_hull, pt, ConvexBody
from pqlab.instances import grid_points
from pqlab.nets import WeightedPoints, verify_weak_net, weak_epsilon_net


def all_subsets_violation(points, eps, net):
    """Reference: scan every support subset, no pruning."""
    entries = points.entries
    need = eps * points.total
    for k in range(1, len(entries) + 1):
        for idx in combinations(range(len(entries)), k):
            if sum(entries[i][1] for i in idx) < need:
                continue
            hull = ConvexBody.hull_of([entries[i][0] for i in idx])
            if not any(hull.contains(x) for x in net):
                return True
    return False


def test_grid_third_is_verified():
    pts = grid_points(3, 3)
    res = weak_epsilon_net(pts, Fraction(1, 3))
    assert verify_weak_net(pts, Fraction(1, 3), res.net) is None
    assert not all_subsets_violation(pts, Fraction(1, 3), res.net)


def test_support_is_always_a_net():
    pts = grid_points(3, 3, seed=2, random_weights=True)
    assert verify_weak_net(pts, Fraction(1, 4), pts.points) is None


def test_empty_net_is_violated():
    pts = grid_points(2, 2)
    assert verify_weak_net(pts, Fraction(1, 2), []) is not None


def test_eps_one():
    pts = grid_points(2, 3)
    res = weak_epsilon_net(pts, 1)
    assert verify_weak_net(pts, 1, res.net) is None


@pytest.mark.parametrize("n", [3, 5, 7])
def test_collinear_median(n):
    pts = WeightedPoints.uniform([pt(i, 0) for i in range(n)])
    median = pt(n // 2, 0)
    assert verify_weak_net(pts, Fraction(1, 2), [median]) is None
    assert not all_subsets_violation(pts, Fraction(1, 2), [median])


def test_collinear_off_median_fails():
    pts = WeightedPoints.uniform([pt(i, 0) for i in range(5)])
    assert verify_weak_net(pts, Fraction(1, 2), [pt(1, 0)]) is not None


@pytest.mark.parametrize("seed", range(6))
def test_verifier_agrees_with_reference(seed):
    import random

    rng = random.Random(seed)
    pts = WeightedPoints(tuple((pt(rng.randint(0, 4), rng.randint(0, 4)), Fraction(rng.randint(1, 3))) for _ in range(6)))
    net = [pt(rng.randint(0, 4), rng.randint(0, 4)) for _ in range(2)]
    eps = Fraction(1, 3)
    assert (verify_weak_net(pts, eps, net) is not None) == all_subsets_violation(pts, eps, net)


def test_preconditions_and_repair_cap():
    pts = grid_points(3, 3)
    with pytest.raises(PreconditionError):
        weak_epsilon_net(pts, 0)


def _needs_repair():
    import random

    rng = random.Random(4)
    raw = [(pt(rng.randint(0, 9), rng.randint(0, 9)), Fraction(rng.randint(1, 3))) for _ in range(10)]
    return WeightedPoints(tuple(dict(raw).items()))


def test_repair_loop_and_cap():
    pts = _needs_repair()
    res = weak_epsilon_net(pts, Fraction(1, 2))
    assert res.repairs >= 1
    assert verify_weak_net(pts, Fraction(1, 2), res.net) is None
    with pytest.raises(BudgetExceeded):
        weak_epsilon_net(pts, Fraction(1, 2), max_repairs=0)
