"""Exit criteria, runnable from pytest and from ``pqlab verify-all``.

Each criterion builds its own seeded instance suite, checks every instance
exactly, and reports pass/fail together with its wall time against the
time limit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil, comb
from typing import Callable

from .bounds import (
    KNOWN_HD_2_4_3,
    PQParams,
    Regime,
    alon_kleitman_exponent,
    decaen_bound,
    exponent_a,
    hd_regime,
    kalai_bound,
    piercing_fraction_bound,
)
from .clique import approx_max_clique, lemma33_check
from .family import (
    Family,
    deepest_point,
    has_pq_property,
    independence_number,
    intersecting_tuples,
    tuple_stats,
)
from .geometry import Point, pt
from .instances import (
    concentric,
    crossing_segments,
    disc_polygons,
    grid_points,
    random_polygons,
    segments_plus_boxes,
    triangle_sides,
)
from .nets import WeightedPoints, verify_weak_net, weak_epsilon_net
from .pierce import exact_min_piercing, fractional_lps


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float
    limit: float
    detail: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] C{self.number} {self.title} ({self.seconds:.2f}s / {self.limit:g}s) {self.detail}"


def _timed(number: int, title: str, limit: float, body: Callable[[dict, list], None]) -> CriterionResult:
    detail: dict = {}
    failures: list = []
    t0 = time.perf_counter()
    body(detail, failures)
    elapsed = time.perf_counter() - t0
    if elapsed > limit:
        failures.append(f"runtime {elapsed:.2f}s exceeds {limit}s")
    return CriterionResult(number, title, not failures, elapsed, limit, detail, failures)


def overlapping_family(n: int, seed: int) -> Family:
    # large bodies in a small window: deep points are common
    return random_polygons(n, seed, grid=6, radius=6, vertices=6)


def general_family(n: int, seed: int) -> Family:
    """Rotate through the generator kinds so suites are not all alike."""
    kind = seed % 4
    if kind == 0:
        return random_polygons(n, seed, grid=12, radius=5, vertices=5)
    if kind == 1:
        return disc_polygons(n, seed, grid=12, radius=5, sides=6)
    if kind == 2:
        return random_polygons(n, seed, grid=10, radius=6, vertices=2)
    return overlapping_family(n, seed)


def criterion_1() -> CriterionResult:
    def body(detail, failures):
        families = checks = 0
        seed = 0
        while families < 100:
            p = 4 + seed % 6
            fam = overlapping_family(p, seed)
            seed += 1
            depth = len(deepest_point(fam)[1])
            qs = [q for q in range(3, depth + 1) if 2 * q > p + 2]
            if not qs:
                continue
            opt = len(exact_min_piercing(fam))
            for q in qs:
                if not has_pq_property(fam, p, q).holds:
                    failures.append(f"seed {seed - 1}: depth {depth} but ({p},{q}) fails")
                    continue
                checks += 1
                if opt > p - q + 1:
                    failures.append(f"seed {seed - 1}: piercing {opt} > p-q+1 = {p - q + 1}")
            families += 1
        tight = 0
        for p in range(3, 10):
            for q in range(3, p + 1):
                if 2 * q > p + 2:
                    fam = segments_plus_boxes(p, q, seed=p * 10 + q)
                    if not has_pq_property(fam, p, q).holds:
                        failures.append(f"segments+boxes ({p},{q}) lacks the property")
                    opt = len(exact_min_piercing(fam))
                    if opt != p - q + 1:
                        failures.append(f"segments+boxes ({p},{q}): piercing {opt} != {p - q + 1}")
                    tight += 1
        detail.update(families=families, checks=checks, seeds_tried=seed, tight_instances=tight)

    return _timed(1, "tight regime: piercing <= p-q+1", 120, body)


def criterion_2() -> CriterionResult:
    def body(detail, failures):
        got = {}
        for n in range(3, 9):
            for seed in range(3):
                opt = len(exact_min_piercing(crossing_segments(n, seed)))
                got[f"{n}/{seed}"] = opt
                if opt != ceil(n / 2):
                    failures.append(f"n={n} seed={seed}: piercing {opt} != {ceil(n / 2)}")
        detail["piercing"] = got

    return _timed(2, "crossing segments: piercing = ceil(n/2)", 60, body)


def min_edges_no_independent(n: int, p: int) -> int:
    """Brute force over all graphs on n vertices: fewest edges with independence number < p."""
    pairs = list(combinations(range(n), 2))
    best = None
    for mask in range(1 << len(pairs)):
        edges = {pairs[i] for i in range(len(pairs)) if mask >> i & 1}
        if best is not None and len(edges) >= best:
            continue
        if all(any(e in edges for e in combinations(s, 2)) for s in combinations(range(n), p)):
            best = len(edges)
    return best


def criterion_3() -> CriterionResult:
    def body(detail, failures):
        instances = 0
        seed = 0
        while instances < 100:
            n = 4 + seed % 5
            fam = general_family(n, seed)
            seed += 1
            for q in (2, 3):
                edges = intersecting_tuples(fam, q)
                alpha = independence_number(n, q, edges)
                p = alpha + 1
                if p > n or p < q:
                    continue
                instances += 1
                bound = decaen_bound(n, p, q)
                if len(edges) < bound:
                    failures.append(f"seed {seed - 1} q={q}: {len(edges)} edges < de Caen {bound}")
        brute = min_edges_no_independent(5, 3)
        bound = decaen_bound(5, 3, 2)
        if bound != Fraction(15, 4) or ceil(bound) != brute:
            failures.append(f"n=5,p=3,q=2: bound {bound}, brute-force minimum {brute}")
        detail.update(instances=instances, seeds_tried=seed, brute_force_min=brute, bound="15/4")

    return _timed(3, "de Caen lower bound on intersecting q-tuples", 120, body)


def criterion_4() -> CriterionResult:
    def body(detail, failures):
        residues = {}
        for seed in range(100):
            n = 4 + seed % 6
            fam = general_family(n, seed)
            stats = tuple_stats(fam, n)
            r = stats.helly_residue_r
            residues[r] = residues.get(r, 0) + 1
            for k in range(1, n + 1):
                if stats.f[k - 1] > kalai_bound(n, r, 2, k):
                    failures.append(f"seed {seed}: f_{k - 1}={stats.f[k - 1]} > Kalai bound")
        detail.update(families=100, residue_histogram=dict(sorted(residues.items())))

    return _timed(4, "Kalai upper bound theorem on f-vectors", 120, body)


def criterion_5() -> CriterionResult:
    def body(detail, failures):
        for seed in range(100):
            n = 3 + seed % 6
            fam = general_family(n, seed)
            res = fractional_lps(fam)
            if res.primal_value != res.dual_value:
                failures.append(f"seed {seed}: primal {res.primal_value} != dual {res.dual_value}")
            w = res.point_weights
            for body_ in fam:
                if w.weight_in(body_) < res.alpha * w.total:
                    failures.append(f"seed {seed}: body {body_.id} under-weighted")
            opt = len(exact_min_piercing(fam))
            if res.primal_value > opt:
                failures.append(f"seed {seed}: LP {res.primal_value} > piercing {opt}")
        detail["instances"] = 100

    return _timed(5, "exact LP duality and weight realization", 180, body)


def criterion_6() -> CriterionResult:
    def body(detail, failures):
        checked = 0
        pool = [overlapping_family(n, s) for n in range(6, 11) for s in range(12)]
        pool += [crossing_segments(6, 0), segments_plus_boxes(5, 4)]
        pool += [concentric(n) for n in range(6, 11)]
        for fam in pool:
            n = len(fam)
            depth = len(deepest_point(fam)[1])
            for p in range(3, n // 2 + 1):
                for q in range(3, p + 1):
                    if not has_pq_property(fam, p, q).holds:
                        continue
                    checked += 1
                    need = ceil(piercing_fraction_bound(PQParams(p, q, 2)) * n)
                    if depth < need:
                        failures.append(f"n={n} ({p},{q}): depth {depth} < {need}")
        if checked == 0:
            failures.append("no verified (p,q)-family with n >= 2p in the suite")
        detail["verified_instances"] = checked

    return _timed(6, "explicit piercing-fraction bound", 60, body)


def interval_violation(points: WeightedPoints, eps, net) -> bool:
    """Oracle for collinear supports: is some net-free run of weight >= eps*W?"""
    pts = points.points
    a = pts[0]
    b = next((p for p in pts if p != a), a)
    if a == b:
        heavy = points.total >= Fraction(eps) * points.total
        return heavy and a not in net
    d = (b.x - a.x, b.y - a.y)

    def param(p):
        return (p.x - a.x) * d[0] + (p.y - a.y) * d[1]

    def on_line(p):
        return (p.x - a.x) * d[1] - (p.y - a.y) * d[0] == 0

    blockers = sorted(param(x) for x in net if on_line(x))
    weight_at: dict[Fraction, Fraction] = {}
    for p, w in points.entries:
        weight_at[param(p)] = weight_at.get(param(p), Fraction(0)) + w
    ts = sorted(weight_at)
    need = Fraction(eps) * points.total
    for i in range(len(ts)):
        acc = Fraction(0)
        for j in range(i, len(ts)):
            if any(ts[i] <= t <= ts[j] for t in blockers):
                break
            acc += weight_at[ts[j]]
            if acc >= need:
                return True
    return False


def criterion_7() -> CriterionResult:
    import random

    def body(detail, failures):
        sizes = []
        count = 0
        for seed in range(54):
            rng = random.Random(seed)
            eps = [Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)][seed % 3]
            if seed < 6:
                pts = grid_points(3, 3 + seed % 2, seed, random_weights=seed % 2 == 1)
            else:
                m = 5 + seed % 10
                pts = WeightedPoints(tuple(
                    (pt(rng.randint(0, 9), rng.randint(0, 9)), Fraction(rng.randint(1, 3))) for _ in range(m)
                ))
            res = weak_epsilon_net(pts, eps)
            if verify_weak_net(pts, eps, res.net) is not None:
                failures.append(f"seed {seed}: returned net rejected by verifier")
            sizes.append(len(res.net))
            count += 1
        agree = 0
        for seed in range(120):
            rng = random.Random(10_000 + seed)
            m = rng.randint(1, 9)
            ts = [rng.randint(-6, 6) for _ in range(m)]
            slope = rng.choice([(1, 0), (0, 1), (1, 2), (2, -1)])
            line = [Point(Fraction(slope[0] * t), Fraction(slope[1] * t) + 1) for t in ts]
            pts = WeightedPoints(tuple((p, Fraction(rng.randint(1, 3))) for p in line))
            net = [Point(Fraction(slope[0] * t, 2), Fraction(slope[1] * t, 2) + 1)
                   for t in rng.sample(range(-12, 13), rng.randint(0, 4))]
            net += [pt(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(rng.randint(0, 2))]
            eps = Fraction(1, rng.randint(1, 4))
            got = verify_weak_net(pts, eps, net) is not None
            want = interval_violation(pts, eps, net)
            if got != want:
                failures.append(f"1-D seed {seed}: verifier says {got}, interval oracle says {want}")
            else:
                agree += 1
        detail.update(nets=count, max_net=max(sizes), mean_net=round(sum(sizes) / len(sizes), 2),
                      one_d_agreements=agree)

    return _timed(7, "weak eps-net construct-and-verify", 180, body)


def criterion_8() -> CriterionResult:
    def body(detail, failures):
        suites = [disc_polygons(n, s, grid=10, radius=5, sides=6) for n in range(5, 10) for s in range(4)]
        suites += [random_polygons(n, s, grid=8, radius=6, vertices=2) for n in range(5, 10) for s in range(4)]
        suites += [crossing_segments(n, 1) for n in range(3, 8)]
        ratios = []
        for fam in suites:
            rep = approx_max_clique(fam)
            if not all(fam.by_id(i).contains(rep.witness_point) for i in rep.approx_clique):
                failures.append("approx clique does not share its witness point")
            if len(rep.approx_clique) < ceil(Fraction(rep.exact_clique_size, rep.clique_piercing)):
                failures.append(
                    f"|approx|={len(rep.approx_clique)} < ceil({rep.exact_clique_size}/{rep.clique_piercing})"
                )
            ratios.append(rep.ratio)
        tri = approx_max_clique(triangle_sides())
        if tri.ratio != Fraction(2, 3):
            failures.append(f"triangle sides ratio {tri.ratio} != 2/3")
        detail.update(instances=len(suites), min_ratio=str(min(ratios)), triangle_ratio=str(tri.ratio))

    return _timed(8, "max-clique approximation vs exact", 120, body)


def criterion_9() -> CriterionResult:
    def body(detail, failures):
        seen = {}
        for k in range(3, 8):
            seg = lemma33_check(crossing_segments(k, k))
            if not seg.tight:
                failures.append(f"k={k}: segments give {seg.union_complexity} != C(k,2) = {comb(k, 2)}")
            thick = lemma33_check(crossing_segments(k, k, width=Fraction(1, 50)))
            if thick.union_complexity < comb(k, 2):
                failures.append(f"k={k}: thin strips give {thick.union_complexity} < C(k,2)")
            seen[k] = (seg.union_complexity, thick.union_complexity)
        detail["segments_vs_strips"] = seen

    return _timed(9, "union complexity of exactly 2-intersecting families", 60, body)


def criterion_10() -> CriterionResult:
    def body(detail, failures):
        if exponent_a(PQParams(3, 3, 2)) != 4:
            failures.append("exponent_a(d=2, q=3) != 4")
        if alon_kleitman_exponent(2) != 6:
            failures.append("Alon-Kleitman exponent for d=2 != 6")
        tight = hd_regime(PQParams(7, 5, 2))
        if tight.regime is not Regime.HD_TIGHT or tight.upper_exact != 3:
            failures.append(f"hd_regime(7,5,2) = {tight.regime}, {tight.upper_exact}")
        gen = hd_regime(PQParams(4, 3, 2))
        if gen.regime is not Regime.GENERAL_A or KNOWN_HD_2_4_3 not in gen.notes:
            failures.append(f"hd_regime(4,3,2) = {gen.regime}: {gen.notes}")
        if not gen.lower <= 3 <= 13:
            failures.append("bracket inconsistent with lower bound")
        detail.update(exponent_a="4", ak_exponent=6, tight_upper=tight.upper_exact, bracket=KNOWN_HD_2_4_3)

    return _timed(10, "bound calculators", 1, body)


CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
]


def run_all(only=None, echo=print) -> list[CriterionResult]:
    results = []
    for i, crit in enumerate(CRITERIA, start=1):
        if only and i not in only:
            continue
        res = crit()
        if echo:
            echo(res.line())
        results.append(res)
    return results
