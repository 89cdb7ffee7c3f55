from fractions import Fraction
from itertools import combinations
from math import comb, e

import pytest
from hypothesis import given, strategies as st

from pqlab.bounds import (
    PQParams,
    Regime,
    alon_kleitman_exponent,
    ceil_log2,
    decaen_bound,
    exponent_a,
    hd_regime,
    integer_root_floor,
    kalai_bound,
    piercing_fraction_bound,
    piercing_fraction_float,
    ramsey_bound,
    weak_net_hd_lower,
)
from pqlab.errors import PreconditionError


def min_edges_without_independent_p(n, p, q):
    """Fewest q-subsets of [n] such that every p-subset contains one (tiny brute force)."""
    all_q = list(combinations(range(n), q))
    all_p = list(combinations(range(n), p))
    for m in range(len(all_q) + 1):
        for edges in combinations(all_q, m):
            es = set(edges)
            if all(any(t in es for t in combinations(s, q)) for s in all_p):
                return m
    raise AssertionError


def test_decaen_value():
    assert decaen_bound(6, 4, 3) == Fraction(5)


@pytest.mark.parametrize("n,p,q", [(5, 3, 2), (5, 4, 3), (6, 4, 3), (5, 4, 2)])
def test_decaen_is_a_lower_bound(n, p, q):
    assert min_edges_without_independent_p(n, p, q) >= decaen_bound(n, p, q)


@given(st.integers(2, 30), st.data())
def test_decaen_never_exceeds_all_tuples(n, data):
    p = data.draw(st.integers(2, n))
    q = data.draw(st.integers(2, p))
    assert decaen_bound(n, p, q) <= comb(n, q)


def test_kalai_bound_formula():
    # the sum runs over i = 0..d only
    assert kalai_bound(6, 2, 2, 3) == comb(2, 3) + comb(2, 2) * comb(4, 1) + comb(2, 1) * comb(4, 2)
    assert kalai_bound(4, 1, 2, 3) == 3


def test_integer_root_floor():
    for v in [0, 1, 2, 26, 27, 28, 10**30]:
        for m in [1, 2, 3, 7]:
            r = integer_root_floor(v, m)
            assert r**m <= v < (r + 1) ** m


def test_piercing_fraction_is_certified_below_real_value():
    params = PQParams(3, 3, 2)
    b = piercing_fraction_bound(params)
    assert b == Fraction(3406268351, 10**12)
    assert b <= piercing_fraction_float(params)
    assert 0 < b <= Fraction(1, 2)


def test_exponents():
    assert exponent_a(PQParams(3, 3, 2)) == 4
    assert exponent_a(PQParams(4, 3, 2)) == 4
    assert alon_kleitman_exponent(2) == 6
    assert [ceil_log2(p) for p in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]


def test_regime_tight():
    r = hd_regime(PQParams(7, 5, 2))
    assert r.regime is Regime.HD_TIGHT and r.upper_exact == 3 == r.lower


def test_regime_general_for_4_3():
    r = hd_regime(PQParams(4, 3, 2))
    assert r.regime is Regime.GENERAL_A
    assert "13" in r.notes and r.lower == 2


def test_regime_large_q_needs_eps():
    params = PQParams(100, 40, 2)
    assert hd_regime(params).regime is Regime.LOG_P_B
    rep = hd_regime(params, Fraction(1, 10))
    assert rep.regime is Regime.LARGE_Q_C and rep.upper_exact == 62


def test_regime_rejects_out_of_range():
    with pytest.raises(PreconditionError):
        hd_regime(PQParams(4, 2, 2))


def test_weak_net_relation_and_ramsey():
    assert weak_net_hd_lower(3, 3, 2).p == 10
    assert ramsey_bound(3, 2) == 48


def test_float_bound_tracks_e():
    params = PQParams(5, 3, 2)
    exact = float(piercing_fraction_bound(params))
    # rounding e up to 2.7183 costs a few parts per million, always downward
    assert exact <= piercing_fraction_float(params)
    assert piercing_fraction_float(params) == pytest.approx(exact, rel=1e-4)
    assert e < 2.7183
