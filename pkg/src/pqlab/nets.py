"""Weak epsilon-nets for weighted planar point sets: build, repair, verify."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil
from typing import Optional, Sequence

from .errors import Budget, BudgetExceeded, PreconditionError, ensure_budget
from .geometry import ConvexBody, Point, convex_hull

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightedPoints:
    entries: tuple[tuple[Point, Fraction], ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("weighted point set is empty")
        for p, w in self.entries:
            if not isinstance(p, Point):
                raise TypeError("entries must hold Point instances")
            if Fraction(w) <= 0:
                raise ValueError(f"weights must be positive, got {w}")

    @classmethod
    def uniform(cls, points: Sequence[Point], weight=1) -> "WeightedPoints":
        return cls(tuple((p, Fraction(weight)) for p in points))

    @property
    def total(self) -> Fraction:
        return sum((w for _, w in self.entries), Fraction(0))

    @property
    def points(self) -> list[Point]:
        return [p for p, _ in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def weight_in(self, body: ConvexBody) -> Fraction:
        return sum((w for p, w in self.entries if body.contains(p)), Fraction(0))


@dataclass(frozen=True)
class NetResult:
    net: tuple[Point, ...]
    grid_size: int
    repairs: int
    eps: Fraction


def _hull_hits(points: list[Point], net: Sequence[Point]) -> bool:
    hull = ConvexBody._trusted(convex_hull(points), 0)
    return any(hull.contains(x) for x in net)


def verify_weak_net(
    points: WeightedPoints, eps, net: Sequence[Point], budget: Budget | None = None
) -> Optional[tuple[int, ...]]:
    """Find support indices of weight >= eps*W whose convex hull misses ``net``.

    A convex set of weight >= eps*W avoiding the net exists exactly when such
    an index set exists (take the support points inside the set), so ``None``
    certifies the net.  The search only extends sets whose hull still avoids
    the net, since hulls grow with the set.
    """
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise PreconditionError(f"need 0 < eps <= 1, got {eps}")
    budget = ensure_budget(budget)
    entries = points.entries
    n = len(entries)
    need = eps * points.total
    suffix = [Fraction(0)] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + entries[i][1]
    net = list(net)
    chosen: list[int] = []

    def dfs(start, weight):
        for i in range(start, n):
            if weight + suffix[i] < need:
                return None
            budget.tick("net-verify")
            chosen.append(i)
            if not _hull_hits([entries[j][0] for j in chosen], net):
                w = weight + entries[i][1]
                if w >= need:
                    return tuple(chosen)
                found = dfs(i + 1, w)
                if found is not None:
                    return found
            chosen.pop()
        return None

    return dfs(0, Fraction(0))


def _quantile_cuts(values: list[tuple[Fraction, Fraction]], parts: int, total: Fraction) -> list[Fraction]:
    ordered = sorted(values)
    cuts = []
    acc = Fraction(0)
    j = 1
    for v, w in ordered:
        acc += w
        while j < parts and acc >= j * total / parts:
            cuts.append(v)
            j += 1
    return sorted(set(cuts))


def weak_epsilon_net(
    points: WeightedPoints, eps, max_repairs: int = 500, budget: Budget | None = None
) -> NetResult:
    """Grid of weighted-quantile crossings, then repair until the verifier accepts.

    Each repair adds the centroid of a violating set, which lies in its hull,
    so the same set never violates twice.  Exceeding ``max_repairs`` raises
    rather than returning an unverified net.
    """
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise PreconditionError(f"need 0 < eps <= 1, got {eps}")
    budget = ensure_budget(budget)
    parts = ceil(2 / eps)
    total = points.total
    xs = _quantile_cuts([(p.x, w) for p, w in points.entries], parts, total)
    ys = _quantile_cuts([(p.y, w) for p, w in points.entries], parts, total)
    net = [Point(x, y) for x, y in product(xs, ys)]
    grid_size = len(net)
    repairs = 0
    while True:
        bad = verify_weak_net(points, eps, net, budget)
        if bad is None:
            break
        if repairs >= max_repairs:
            raise BudgetExceeded("net-repair", max_repairs)
        sel = [points.entries[i][0] for i in bad]
        centroid = Point(sum(p.x for p in sel) / len(sel), sum(p.y for p in sel) / len(sel))
        net.append(centroid)
        repairs += 1
    log.debug("weak net: %d grid points, %d repairs", grid_size, repairs)
    return NetResult(tuple(net), grid_size, repairs, eps)
