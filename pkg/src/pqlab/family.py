"""Family-level combinatorics: who intersects whom, and how many k-tuples do."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .errors import Budget, PreconditionError, VerificationError, ensure_budget
from .geometry import ConvexBody, Point, candidate_points, intersect

PLANE_DIM = 2


@dataclass(frozen=True)
class Family:
    """Bodies ordered by ascending id; ids are unique and never renumbered."""

    bodies: tuple[ConvexBody, ...]

    def __post_init__(self):
        bodies = tuple(sorted(self.bodies, key=lambda b: b.id))
        if not bodies:
            raise ValueError("a family needs at least one body")
        ids = [b.id for b in bodies]
        if len(set(ids)) != len(ids):
            raise ValueError("body ids must be unique")
        object.__setattr__(self, "bodies", bodies)

    @classmethod
    def of(cls, bodies: Sequence[ConvexBody], renumber: bool = True) -> "Family":
        if renumber:
            bodies = [b.with_id(i) for i, b in enumerate(bodies)]
        return cls(tuple(bodies))

    def __len__(self) -> int:
        return len(self.bodies)

    def __iter__(self):
        return iter(self.bodies)

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(b.id for b in self.bodies)

    def by_id(self, ident: int) -> ConvexBody:
        for b in self.bodies:
            if b.id == ident:
                return b
        raise KeyError(ident)

    def subfamily(self, ids) -> "Family":
        wanted = set(ids)
        missing = wanted - set(self.ids)
        if missing:
            raise KeyError(f"unknown ids {sorted(missing)}")
        return Family(tuple(b for b in self.bodies if b.id in wanted))

    def without(self, ids) -> "Family":
        drop = set(ids)
        return Family(tuple(b for b in self.bodies if b.id not in drop))


@dataclass(frozen=True)
class TupleStats:
    f: tuple[int, ...]
    helly_residue_r: Optional[int]
    n: int
    k_max: int


@dataclass(frozen=True)
class PQDecision:
    holds: bool
    p: int
    q: int
    counterexample: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class DichotomyResult:
    """Outcome of splitting a (p,q)-family.

    ``branch == "left"``: the family already has the (p', q') property.
    ``branch == "right"``: ``subfamily`` has p' members and no q' of them meet,
    and the rest of the family has the ``residual`` (p - p', q - q' + 1) property.
    """

    branch: str
    p_prime: int
    q_prime: int
    subfamily: Optional[tuple[int, ...]] = None
    residual: Optional[tuple[int, int]] = None
    found_by: Optional[str] = None


def intersecting_subsets(
    bodies: Sequence[ConvexBody], k_max: int, budget: Budget | None = None
) -> Iterator[tuple[tuple[int, ...], ConvexBody]]:
    """Yield every index tuple of size <= k_max with nonempty common intersection.

    Depth-first in lexicographic order, extending only tuples that already
    intersect (having a common point is closed under taking subsets).
    """
    budget = ensure_budget(budget)
    n = len(bodies)

    def extend(prefix, inter, start):
        for j in range(start, n):
            budget.tick("subset-enumeration")
            nxt = intersect(inter, bodies[j])
            if nxt is None:
                continue
            tup = prefix + (j,)
            yield tup, nxt
            if len(tup) < k_max:
                yield from extend(tup, nxt, j + 1)

    for i in range(n):
        budget.tick("subset-enumeration")
        yield (i,), bodies[i]
        if k_max > 1:
            yield from extend((i,), bodies[i], i + 1)


def intersection_graph(family: Family) -> dict[int, frozenset[int]]:
    adj: dict[int, set[int]] = {b.id: set() for b in family}
    for a, b in combinations(family.bodies, 2):
        if intersect(a, b) is not None:
            adj[a.id].add(b.id)
            adj[b.id].add(a.id)
    return {k: frozenset(v) for k, v in adj.items()}


def tuple_stats(family: Family, k_max: int, budget: Budget | None = None) -> TupleStats:
    """Exact f-vector ``f[k-1]`` = #k-subfamilies with a common point, k = 1..k_max.

    The Helly residue is the least r >= 0 with ``f[2 + r] == 0``.  When
    ``k_max == n`` every larger tuple count is zero, so r is always defined.
    """
    n = len(family)
    if not 1 <= k_max <= n:
        raise PreconditionError(f"need 1 <= k_max <= n, got k_max={k_max}, n={n}")
    f = [0] * k_max
    for tup, _ in intersecting_subsets(family.bodies, k_max, budget):
        f[len(tup) - 1] += 1
    r = None
    for cand in range(0, n + 1):
        idx = PLANE_DIM + cand
        if idx < k_max:
            if f[idx] == 0:
                r = cand
                break
        elif k_max == n:
            r = cand
            break
        else:
            break
    return TupleStats(tuple(f), r, n, k_max)


def intersecting_tuples(family: Family, q: int, budget: Budget | None = None) -> set[tuple[int, ...]]:
    """Index tuples of size exactly q with a common point (the q-uniform hypergraph)."""
    return {t for t, _ in intersecting_subsets(family.bodies, q, budget) if len(t) == q}


def _independent_search(n: int, size: int, q: int, edges: set, budget: Budget):
    # Lexicographically first `size`-subset of range(n) containing no edge.
    chosen: list[int] = []

    def ok(i):
        return not any(t + (i,) in edges for t in combinations(chosen, q - 1))

    def dfs(start):
        if len(chosen) == size:
            return True
        for i in range(start, n - (size - len(chosen)) + 1):
            budget.tick("pq-search")
            if ok(i):
                chosen.append(i)
                if dfs(i + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if dfs(0) else None


def independence_number(n: int, q: int, edges: set, budget: Budget | None = None) -> int:
    """Largest vertex set with no edge of the q-uniform hypergraph ``edges``."""
    budget = ensure_budget(budget)
    best = 0
    for size in range(1, n + 1):
        if _independent_search(n, size, q, edges, budget) is None:
            break
        best = size
    return best


def has_pq_property(family: Family, p: int, q: int, budget: Budget | None = None) -> PQDecision:
    """Exhaustive (p,q)-property test: every p members contain q with a common point.

    On failure the counterexample is the lexicographically smallest id-set of
    size p with no intersecting q-subset.
    """
    n = len(family)
    if q < 1 or q > p:
        raise PreconditionError(f"need 1 <= q <= p, got p={p}, q={q}")
    if p > n:
        raise PreconditionError(f"p={p} exceeds family size n={n}")
    budget = ensure_budget(budget)
    edges = intersecting_tuples(family, q, budget)
    found = _independent_search(n, p, q, edges, budget)
    if found is None:
        return PQDecision(True, p, q)
    ids = tuple(family.bodies[i].id for i in found)
    return PQDecision(False, p, q, ids)


def _greedy_avoiding(family: Family, size: int, q: int, edges: set) -> Optional[tuple[int, ...]]:
    chosen: list[int] = []
    for i in range(len(family)):
        if not any(t + (i,) in edges for t in combinations(chosen, q - 1)):
            chosen.append(i)
            if len(chosen) == size:
                return tuple(chosen)
    return None


def dichotomy_split(
    family: Family, p: int, q: int, p_prime: int, q_prime: int, budget: Budget | None = None
) -> DichotomyResult:
    """Either certify the (p', q') property or split off a witness subfamily.

    Both outcomes are re-verified exhaustively before returning.
    """
    if not (p_prime < p and q_prime < q):
        raise PreconditionError(f"need p' < p and q' < q, got p'={p_prime}, q'={q_prime} for ({p},{q})")
    if not 1 <= q_prime <= p_prime:
        raise PreconditionError(f"need 1 <= q' <= p', got ({p_prime},{q_prime})")
    budget = ensure_budget(budget)
    if not has_pq_property(family, p, q, budget).holds:
        raise PreconditionError(f"family does not satisfy the ({p},{q}) property")

    edges = intersecting_tuples(family, q_prime, budget)
    found_by = "greedy"
    witness = _greedy_avoiding(family, p_prime, q_prime, edges)
    if witness is None:
        found_by = "exhaustive"
        witness = _independent_search(len(family), p_prime, q_prime, edges, budget)
    if witness is None:
        return DichotomyResult("left", p_prime, q_prime)

    ids = tuple(family.bodies[i].id for i in witness)
    sub = family.subfamily(ids)
    if len(sub) != p_prime or tuple(intersecting_tuples(sub, q_prime, budget)):
        raise VerificationError("dichotomy", f"witness {ids} has an intersecting {q_prime}-tuple")
    rp, rq = p - p_prime, q - q_prime + 1
    rest = family.without(ids)
    if rp < rq or rp > len(rest) or not has_pq_property(rest, rp, rq, budget).holds:
        raise VerificationError("dichotomy", f"residual family fails the ({rp},{rq}) property")
    return DichotomyResult("right", p_prime, q_prime, ids, (rp, rq), found_by)


def find_exactly_two_intersecting(
    family: Family, k: int, budget: Budget | None = None
) -> Optional[tuple[int, ...]]:
    """A k-subfamily that is pairwise intersecting with no three members meeting."""
    n = len(family)
    if k < 3:
        raise PreconditionError(f"need k >= 3, got {k}")
    if k > n:
        raise PreconditionError(f"k={k} exceeds family size n={n}")
    budget = ensure_budget(budget)
    bodies = family.bodies
    pair = {}
    for i, j in combinations(range(n), 2):
        inter = intersect(bodies[i], bodies[j])
        if inter is not None:
            pair[i, j] = inter
    chosen: list[int] = []

    def ok(j):
        if any((i, j) not in pair for i in chosen):
            return False
        return all(intersect(pair[a, b], bodies[j]) is None for a, b in combinations(chosen, 2))

    def dfs(start):
        if len(chosen) == k:
            return True
        for j in range(start, n - (k - len(chosen)) + 1):
            budget.tick("exactly-2-search")
            if ok(j):
                chosen.append(j)
                if dfs(j + 1):
                    return True
                chosen.pop()
        return False

    if not dfs(0):
        return None
    return tuple(bodies[i].id for i in chosen)


def max_clique_exact(graph: dict[int, frozenset[int]]) -> tuple[int, ...]:
    """Maximum clique by Bron-Kerbosch with pivoting.

    Ties go to the lexicographically smallest sorted id tuple.
    """
    best: tuple[int, ...] = ()

    def better(c):
        return len(c) > len(best) or (len(c) == len(best) and c < best)

    def expand(r, p, x):
        nonlocal best
        if not p and not x:
            c = tuple(sorted(r))
            if better(c):
                best = c
            return
        if len(r) + len(p) < len(best):
            return
        pivot = max(p | x, key=lambda u: (len(graph[u] & p), -u))
        for v in sorted(p - graph[pivot]):
            expand(r | {v}, p & graph[v], x & graph[v])
            p = p - {v}
            x = x | {v}

    expand(frozenset(), frozenset(graph), frozenset())
    return best


def depth_profile(family: Family, points: Sequence[Point] | None = None) -> list[tuple[Point, tuple[int, ...]]]:
    """(point, ids of bodies containing it) for each candidate point."""
    if points is None:
        points = candidate_points(family.bodies)
    return [(pnt, tuple(b.id for b in family if b.contains(pnt))) for pnt in points]


def deepest_point(family: Family) -> tuple[Point, tuple[int, ...]]:
    """Candidate point of maximum depth; ties broken by lexicographic point order."""
    profile = depth_profile(family)
    best = profile[0]
    for entry in profile[1:]:
        if len(entry[1]) > len(best[1]):
            best = entry
    return best


def max_depth(family: Family) -> int:
    return len(deepest_point(family)[1])

