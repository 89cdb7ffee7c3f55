"""Piercing: exact and greedy transversals, fractional LPs, and the four-stage pipeline."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Optional, Sequence

from .bounds import PQParams, decaen_bound, kalai_bound, piercing_fraction_bound
from .errors import Budget, PreconditionError, VerificationError, ensure_budget
from .family import Family, deepest_point, has_pq_property, tuple_stats
from .geometry import Point, candidate_points
from .lp import GE, LE, solve_lp
from .nets import WeightedPoints, weak_epsilon_net

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PiercingSet:
    points: tuple[Point, ...]
    certificate: dict[int, int]
    method: str = ""
    lower_bound: Optional[int] = None

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class LPResult:
    primal_value: Fraction
    dual_value: Fraction
    point_weights: WeightedPoints
    set_weights: dict[int, Fraction]
    alpha: Fraction
    columns: int
    pivots: int


@dataclass
class PipelineReport:
    piercing: PiercingSet
    stages: dict = field(default_factory=dict)


def certify(family: Family, points: Sequence[Point], method: str = "", lower_bound=None) -> PiercingSet:
    """Assign each body the first point it contains; raise if some body is missed."""
    cert = {}
    for body in family:
        idx = next((i for i, p in enumerate(points) if body.contains(p)), None)
        if idx is None:
            raise VerificationError("certify", f"body {body.id} contains none of the {len(points)} points")
        cert[body.id] = idx
    return PiercingSet(tuple(points), cert, method, lower_bound)


def coverage_columns(family: Family) -> list[tuple[Point, int]]:
    """Candidate points as (point, bitmask over body index), pruned to maximal masks.

    Duplicate masks keep their lexicographically smallest point; a mask that
    is a strict subset of another is dropped since it never helps a cover.
    Sorted by depth descending, then point order.
    """
    bodies = family.bodies
    best: dict[int, Point] = {}
    for p in candidate_points(bodies):
        mask = 0
        for i, b in enumerate(bodies):
            if b.contains(p):
                mask |= 1 << i
        if mask and (mask not in best or p < best[mask]):
            best[mask] = p
    masks = list(best)
    maximal = [m for m in masks if not any(o != m and o & m == m for o in masks)]
    cols = [(best[m], m) for m in maximal]
    cols.sort(key=lambda c: (-bin(c[1]).count("1"), c[0]))
    return cols


def fractional_lps(family: Family) -> LPResult:
    """Solve the fractional transversal LP and its packing dual exactly.

    Both are solved independently; the values must agree to the last bit, and
    both solutions are re-checked for feasibility.  The primal solution,
    scaled to total weight 1, gives every body weight at least 1/value.
    """
    cols = coverage_columns(family)
    n = len(family)
    A = [[1 if (m >> i) & 1 else 0 for _, m in cols] for i in range(n)]
    primal = solve_lp([1] * len(cols), A, [GE] * n, [1] * n)
    At = [[A[i][j] for i in range(n)] for j in range(len(cols))]
    dual = solve_lp([1] * n, At, [LE] * len(cols), [1] * len(cols), maximize=True)
    if primal.status != "optimal" or dual.status != "optimal":
        raise VerificationError("lp", f"unexpected LP status {primal.status}/{dual.status}")
    if primal.value != dual.value:
        raise VerificationError("lp", f"duality gap: primal {primal.value} != dual {dual.value}")
    x, y = primal.x, dual.x
    for i in range(n):
        if sum(x[j] for j in range(len(cols)) if A[i][j]) < 1:
            raise VerificationError("lp", f"primal solution leaves body index {i} under-covered")
    for j in range(len(cols)):
        if sum(y[i] for i in range(n) if A[i][j]) > 1:
            raise VerificationError("lp", f"dual solution overloads point {cols[j][0]}")
    value = primal.value
    weights = WeightedPoints(tuple((cols[j][0], x[j] / value) for j in range(len(cols)) if x[j] > 0))
    alpha = 1 / value
    for body in family:
        if weights.weight_in(body) < alpha * weights.total:
            raise VerificationError("lp", f"body {body.id} gets less than alpha of the weight")
    set_weights = {b.id: y[i] for i, b in enumerate(family.bodies)}
    return LPResult(value, dual.value, weights, set_weights, alpha, len(cols), primal.pivots + dual.pivots)


def exact_min_piercing(family: Family, budget: Budget | None = None) -> PiercingSet:
    """Minimum transversal by iterative-deepening set cover over candidate points.

    Starts at the ceiling of the LP value, a valid lower bound, so a cover
    found at size k is optimal: every smaller size was either excluded by the
    LP or searched exhaustively.
    """
    budget = ensure_budget(budget)
    cols = coverage_columns(family)
    n = len(family)
    full = (1 << n) - 1
    lp_value = fractional_lps(family).primal_value
    start = max(1, ceil(lp_value))
    covering = [[j for j, (_, m) in enumerate(cols) if (m >> i) & 1] for i in range(n)]
    widest = max(bin(m).count("1") for _, m in cols)
    failed: set[tuple[int, int]] = set()
    chosen: list[int] = []

    def search(uncovered, left):
        if uncovered == 0:
            return True
        if left == 0 or bin(uncovered).count("1") > left * widest:
            return False
        if (uncovered, left) in failed:
            return False
        budget.tick("exact-piercing")
        target = min(
            (i for i in range(n) if (uncovered >> i) & 1),
            key=lambda i: (len(covering[i]), i),
        )
        for j in covering[target]:
            chosen.append(j)
            if search(uncovered & ~cols[j][1], left - 1):
                return True
            chosen.pop()
        failed.add((uncovered, left))
        return False

    k = start
    while not search(full, k):
        k += 1
    points = [cols[j][0] for j in chosen]
    return certify(family, points, "exact", start)


def greedy_piercing(family: Family) -> PiercingSet:
    """Repeatedly take the candidate point stabbing the most unpierced bodies."""
    pts = candidate_points(family.bodies)
    left = list(family.bodies)
    chosen: list[Point] = []
    while left:
        best, best_hits = None, []
        for p in pts:
            hits = [b for b in left if b.contains(p)]
            if len(hits) > len(best_hits):
                best, best_hits = p, hits
        chosen.append(best)
        hit_ids = {b.id for b in best_hits}
        left = [b for b in left if b.id not in hit_ids]
    return certify(family, chosen, "greedy")


def ak_pipeline(
    family: Family, params: PQParams, budget: Budget | None = None, max_repairs: int = 500
) -> PipelineReport:
    """Run the four Alon-Kleitman stages on a concrete planar family.

    1. f-vector with the de Caen lower and Kalai upper bounds checked;
    2. the deepest point against the explicit piercing-fraction bound;
    3. exact fractional LPs giving weights with per-body share >= alpha;
    4. a verified weak alpha-net, which pierces every body.
    """
    if params.d != 2:
        raise PreconditionError("the pipeline is planar (d = 2)")
    budget = ensure_budget(budget)
    p, q, n = params.p, params.q, len(family)
    if not has_pq_property(family, p, q, budget).holds:
        raise PreconditionError(f"family does not satisfy the ({p},{q}) property")
    stages: dict = {}

    stats = tuple_stats(family, n, budget)
    r = stats.helly_residue_r
    f = stats.f
    s1 = {"f": list(f), "helly_residue_r": r}
    if q >= 2:
        dc = decaen_bound(n, p, q)
        s1["decaen_bound"] = dc
        s1["q_tuples"] = f[q - 1]
        if f[q - 1] < dc:
            raise VerificationError("stage1", f"{f[q - 1]} intersecting {q}-tuples is below de Caen bound {dc}")
    for k in range(1, n + 1):
        if f[k - 1] > kalai_bound(n, r, 2, k):
            raise VerificationError("stage1", f"f_{k - 1}={f[k - 1]} exceeds Kalai bound")
    stages["1_tuple_counts"] = s1

    point, ids = deepest_point(family)
    s2 = {"point": point, "depth": len(ids), "n": n, "applies": n >= 2 * p}
    if q >= 3:
        frac = piercing_fraction_bound(params)
        s2["fraction_bound"] = frac
        s2["required_depth"] = ceil(frac * n)
        if n >= 2 * p and len(ids) < ceil(frac * n):
            raise VerificationError("stage2", f"depth {len(ids)} below guaranteed {ceil(frac * n)}")
    stages["2_deep_point"] = s2

    lps = fractional_lps(family)
    stages["3_lp"] = {
        "primal_value": lps.primal_value,
        "dual_value": lps.dual_value,
        "alpha": lps.alpha,
        "support": len(lps.point_weights),
    }

    net = weak_epsilon_net(lps.point_weights, lps.alpha, max_repairs, budget)
    piercing = certify(family, list(net.net), "alon-kleitman")
    stages["4_weak_net"] = {"eps": net.eps, "grid_points": net.grid_size, "repairs": net.repairs, "size": len(net.net)}
    log.info("pipeline: %d bodies pierced by %d net points", n, len(net.net))
    return PipelineReport(piercing, stages)
