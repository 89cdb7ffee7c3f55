"""Union complexity, exactly-2-intersecting structure, and max-clique approximation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional

from .bounds import ramsey_bound
from .errors import Budget, PreconditionError, VerificationError, ensure_budget
from .family import (
    Family,
    deepest_point,
    find_exactly_two_intersecting,
    has_pq_property,
    intersection_graph,
    max_clique_exact,
)
from .geometry import Point, boundary_crossings
from .pierce import exact_min_piercing


@dataclass(frozen=True)
class UnionComplexityReport:
    vertex_count: int
    vertices: tuple[Point, ...]
    k: int
    threshold: int


@dataclass(frozen=True)
class UnionCondition:
    holds: bool
    k: int
    threshold: int
    witness: Optional[tuple[int, ...]] = None
    witness_complexity: Optional[int] = None
    subsets_checked: int = 0


@dataclass(frozen=True)
class CliqueApproxReport:
    approx_clique: tuple[int, ...]
    witness_point: Point
    exact_clique: Optional[tuple[int, ...]] = None
    exact_clique_size: Optional[int] = None
    ratio: Optional[Fraction] = None
    clique_piercing: Optional[int] = None


@dataclass(frozen=True)
class Lemma33Record:
    k: int
    union_complexity: int
    threshold: int
    holds: bool
    tight: bool


@dataclass(frozen=True)
class Lemma32Record:
    p: int
    k: int
    smallest_m: Optional[int]
    instance_ramsey: Optional[int]
    ramsey_bound: int
    implication_holds: bool


def _pair_crossings(family: Family) -> dict[tuple[int, int], set[Point]]:
    bodies = family.bodies
    return {
        (a.id, b.id): boundary_crossings(a, b)
        for a, b in combinations(bodies, 2)
    }


def _count_on_union_boundary(family: Family, ids, crossings) -> list[Point]:
    members = [family.by_id(i) for i in ids]
    pts: set[Point] = set()
    for a, b in combinations(sorted(ids), 2):
        pts |= crossings[a, b]
    return sorted(p for p in pts if not any(body.interior_contains(p) for body in members))


def union_complexity(family: Family) -> UnionComplexityReport:
    """Boundary-boundary crossing points that lie on the boundary of the union.

    A crossing counts when no body has it in its 2-D interior.  Segments and
    points have empty interior, so every crossing of segments counts.
    """
    crossings = _pair_crossings(family)
    verts = _count_on_union_boundary(family, family.ids, crossings)
    k = len(family)
    return UnionComplexityReport(len(verts), tuple(verts), k, comb(k, 2))


def check_union_condition(family: Family, k: int, budget: Budget | None = None) -> UnionCondition:
    """True iff every k members have union complexity below C(k, 2)."""
    n = len(family)
    if k < 3:
        raise PreconditionError(f"need k >= 3, got {k}")
    if k > n:
        raise PreconditionError(f"k={k} exceeds family size n={n}")
    budget = ensure_budget(budget)
    crossings = _pair_crossings(family)
    threshold = comb(k, 2)
    checked = 0
    for ids in combinations(family.ids, k):
        budget.tick("union-condition")
        checked += 1
        c = len(_count_on_union_boundary(family, ids, crossings))
        if c >= threshold:
            return UnionCondition(False, k, threshold, ids, c, checked)
    return UnionCondition(True, k, threshold, subsets_checked=checked)


def lemma33_check(family: Family, budget: Budget | None = None) -> Lemma33Record:
    """Check that an exactly-2-intersecting family of k >= 3 sets has union complexity >= C(k,2)."""
    k = len(family)
    if k < 3:
        raise PreconditionError(f"need at least 3 bodies, got {k}")
    if find_exactly_two_intersecting(family, k, budget) is None:
        raise PreconditionError("family is not exactly 2-intersecting")
    report = union_complexity(family)
    holds = report.vertex_count >= report.threshold
    if not holds:
        raise VerificationError(
            "union-lower-bound", f"union complexity {report.vertex_count} below C({k},2) = {report.threshold}"
        )
    return Lemma33Record(k, report.vertex_count, report.threshold, holds, report.vertex_count == report.threshold)


def approx_max_clique(family: Family, exact: bool = True, budget: Budget | None = None) -> CliqueApproxReport:
    """Return the bodies containing the deepest arrangement point.

    Depth is maximized over candidate points, which is where the deepest
    cell of a closed polygonal arrangement attains its depth.  With
    ``exact=True`` the true maximum clique, its piercing number and the
    approximation ratio are computed as well.
    """
    point, ids = deepest_point(family)
    if not exact:
        return CliqueApproxReport(ids, point)
    best = max_clique_exact(intersection_graph(family))
    piercing = len(exact_min_piercing(family.subfamily(best), budget))
    return CliqueApproxReport(ids, point, best, len(best), Fraction(len(ids), len(best)), piercing)


def smallest_three_property(family: Family, budget: Budget | None = None) -> Optional[int]:
    """Least m such that every m members include three with a common point."""
    for m in range(3, len(family) + 1):
        if has_pq_property(family, m, 3, budget).holds:
            return m
    return None


def instance_ramsey(family: Family, k: int, p: int, budget: Budget | None = None) -> Optional[int]:
    """Least R such that every R members contain k pairwise meeting or p pairwise disjoint ones."""
    budget = ensure_budget(budget)
    graph = intersection_graph(family)
    ids = family.ids
    for size in range(1, len(ids) + 1):
        ok = True
        for sub in combinations(ids, size):
            budget.tick("ramsey-scan")
            members = set(sub)
            g = {v: graph[v] & members for v in sub}
            if len(max_clique_exact(g)) >= k:
                continue
            co = {v: frozenset(members - graph[v] - {v}) for v in sub}
            if len(max_clique_exact(co)) >= p:
                continue
            ok = False
            break
        if ok:
            return size
    return None


def lemma32_check(family: Family, p: int, k: int, budget: Budget | None = None) -> Lemma32Record:
    """Desk-scale check of the (p,2) + no exactly-2-intersecting k-set => (m,3) implication.

    Finds the smallest m for which every m members contain three meeting
    sets, and the instance's own Ramsey threshold R for (k, p); the Ramsey
    argument gives m <= R whenever R exists.
    """
    budget = ensure_budget(budget)
    if p < 2 or p > len(family):
        raise PreconditionError(f"need 2 <= p <= n, got p={p}")
    if k < 3:
        raise PreconditionError(f"need k >= 3, got k={k}")
    if not has_pq_property(family, p, 2, budget).holds:
        raise PreconditionError(f"family does not satisfy the ({p},2) property")
    if k <= len(family) and find_exactly_two_intersecting(family, k, budget) is not None:
        raise PreconditionError(f"family has an exactly 2-intersecting subfamily of size {k}")
    m = smallest_three_property(family, budget)
    r = instance_ramsey(family, k, p, budget)
    holds = r is None or (m is not None and m <= max(r, 3))
    if not holds:
        raise VerificationError("three-property", f"smallest m={m} exceeds instance Ramsey threshold {r}")
    return Lemma32Record(p, k, m, r, ramsey_bound(k, p), holds)
