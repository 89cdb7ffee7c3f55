import random
from fractions import Fraction

import pytest
from scipy.optimize import linprog

from pqlab.lp import solve_lp


def test_small_minimization():
    # min x + y  s.t.  x + 2y >= 2,  3x + y >= 3
    sol = solve_lp([1, 1], [[1, 2], [3, 1]], [">=", ">="], [2, 3])
    assert sol.status == "optimal"
    assert sol.value == Fraction(7, 5)
    assert sol.x == (Fraction(4, 5), Fraction(3, 5))


def test_equality_and_maximize():
    sol = solve_lp([1, 2], [[1, 1]], ["=="], [4], maximize=True)
    assert sol.value == 8 and sol.x == (0, 4)


def test_infeasible_and_unbounded():
    assert solve_lp([1], [[1], [1]], ["<=", ">="], [1, 2]).status == "infeasible"
    assert solve_lp([1], [[1]], [">="], [1], maximize=True).status == "unbounded"


def test_bad_sense():
    with pytest.raises(ValueError):
        solve_lp([1], [[1]], ["<"], [1])


@pytest.mark.parametrize("seed", range(40))
def test_matches_scipy_on_random_covering_lps(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 6), rng.randint(1, 6)
    A = [[rng.randint(0, 3) for _ in range(n)] for _ in range(m)]
    for row in A:
        if not any(row):
            row[rng.randrange(n)] = 1
    b = [rng.randint(1, 5) for _ in range(m)]
    c = [rng.randint(1, 4) for _ in range(n)]
    ours = solve_lp(c, A, [">="] * m, b)
    ref = linprog(c, A_ub=[[-v for v in r] for r in A], b_ub=[-v for v in b], method="highs")
    assert ours.status == "optimal" and ref.status == 0
    assert float(ours.value) == pytest.approx(ref.fun, abs=1e-9)
    # exact feasibility of our own solution
    for row, bi in zip(A, b):
        assert sum(a * x for a, x in zip(row, ours.x)) >= bi
