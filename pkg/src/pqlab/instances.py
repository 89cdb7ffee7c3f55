"""Seeded generators for the family classes used in experiments.

Output is a pure function of the GenSpec: the same GenSpec always yields a
bit-identical family.
"""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Union

from .errors import PreconditionError, VerificationError
from .family import Family, intersection_graph, tuple_stats
from .geometry import ConvexBody, Point, pt
from .nets import WeightedPoints

MAX_RETRIES = 50


class Kind(str, Enum):
    CROSSING_SEGMENTS = "crossing-segments"
    DISJOINT = "disjoint"
    CONCENTRIC = "concentric"
    SEGMENTS_PLUS_BOXES = "segments-plus-boxes"
    RANDOM_POLYGONS = "random-polygons"
    DISC_POLYGONS = "disc-polygons"
    GRID_POINTS = "grid-points"


@dataclass(frozen=True)
class GenSpec:
    kind: Kind
    n: int = 0
    seed: int = 0
    p: int = 0
    q: int = 0
    grid: int = 20
    radius: int = 6
    vertices: int = 5
    sides: int = 8
    width: Fraction = Fraction(0)
    rows: int = 3
    cols: int = 3
    random_weights: bool = False

    def to_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = self.kind.value
        d["width"] = f"{self.width.numerator}/{self.width.denominator}"
        return d


def crossing_segments(n: int, seed: int = 0, width=0) -> Family:
    """n lines of distinct slopes 1, 1/2, ..., 1/n clipped to a box holding every crossing.

    With ``width > 0`` each line becomes a thin parallelogram of that
    vertical thickness.  Pairwise crossing and no triple point are verified
    exactly; a degenerate draw is retried with the next seed.
    """
    if n < 1:
        raise PreconditionError("crossing-segments needs n >= 1")
    width = Fraction(width)
    if width < 0:
        raise PreconditionError("width must be >= 0")
    for attempt in range(MAX_RETRIES):
        rng = random.Random(seed * 1000003 + attempt)
        slopes = [Fraction(1, i + 1) for i in range(n)]
        rng.shuffle(slopes)
        intercepts = [Fraction(rng.randint(-3 * n, 3 * n)) for _ in range(n)]
        lines = list(zip(slopes, intercepts))
        xs = [(c2 - c1) / (s1 - s2) for (s1, c1), (s2, c2) in combinations(lines, 2)]
        if not _no_three_concurrent(lines):
            continue
        lo = Fraction(math.floor(min(xs, default=0)) - 1)
        hi = Fraction(math.ceil(max(xs, default=0)) + 1)
        bodies = []
        for i, (s, c) in enumerate(lines):
            a, b = Point(lo, s * lo + c), Point(hi, s * hi + c)
            if width == 0:
                bodies.append(ConvexBody.segment(a, b, i))
            else:
                bodies.append(ConvexBody.hull_of([a, b, Point(hi, b.y + width), Point(lo, a.y + width)], i))
        fam = Family(tuple(bodies))
        if _exactly_two(fam):
            return fam
    raise VerificationError("gen", f"no general-position crossing family after {MAX_RETRIES} retries")


def _no_three_concurrent(lines) -> bool:
    for (s1, c1), (s2, c2), (s3, c3) in combinations(lines, 3):
        x = (c2 - c1) / (s1 - s2)
        if s3 * x + c3 == s1 * x + c1:
            return False
    return True


def _exactly_two(fam: Family) -> bool:
    graph = intersection_graph(fam)
    if any(len(v) != len(fam) - 1 for v in graph.values()):
        return False
    if len(fam) < 3:
        return True
    return tuple_stats(fam, 3).f[2] == 0


def _lattice_polygon(rng: random.Random, x0: int, y0: int, x1: int, y1: int, count: int, ident: int) -> ConvexBody:
    pts = [pt(rng.randint(x0, x1), rng.randint(y0, y1)) for _ in range(count)]
    return ConvexBody.hull_of(pts, ident)


def disjoint(n: int, seed: int = 0, vertices: int = 5) -> Family:
    """Random lattice polygons, one per cell of a 10-unit grid, so none touch."""
    rng = random.Random(seed)
    cols = max(1, math.isqrt(n - 1) + 1) if n > 0 else 1
    bodies = []
    for i in range(n):
        cx, cy = 10 * (i % cols), 10 * (i // cols)
        bodies.append(_lattice_polygon(rng, cx + 1, cy + 1, cx + 8, cy + 8, vertices, i))
    return Family(tuple(bodies))


def concentric(n: int) -> Family:
    return Family(tuple(ConvexBody.box(-k, -k, k, k, k - 1) for k in range(1, n + 1)))


def segments_plus_boxes(p: int, q: int, seed: int = 0) -> Family:
    """p - q + 1 disjoint vertical segments inside q - 1 nested boxes.

    Has the (p, q) property with piercing number exactly p - q + 1.
    """
    if not p >= q >= 2:
        raise PreconditionError(f"need p >= q >= 2, got p={p}, q={q}")
    rng = random.Random(seed)
    segs = p - q + 1
    bodies = []
    for i in range(segs):
        x = Fraction(3 * i) + Fraction(rng.randint(0, 4), 4)
        y0 = rng.randint(0, 4)
        y1 = rng.randint(y0 + 1, 10)
        bodies.append(ConvexBody.segment((x, y0), (x, y1), i))
    right = 3 * segs
    for j in range(q - 1):
        bodies.append(ConvexBody.box(-1 - j, -1 - j, right + j, 11 + j, segs + j))
    return Family(tuple(bodies))


def random_polygons(n: int, seed: int = 0, grid: int = 20, radius: int = 6, vertices: int = 5) -> Family:
    """Hulls of random lattice points in random windows of a grid x grid square."""
    if grid < 1 or radius < 1 or vertices < 1:
        raise PreconditionError("grid, radius and vertices must be positive")
    rng = random.Random(seed)
    bodies = []
    for i in range(n):
        cx, cy = rng.randint(0, grid), rng.randint(0, grid)
        r = rng.randint(1, radius)
        bodies.append(_lattice_polygon(rng, cx - r, cy - r, cx + r, cy + r, vertices, i))
    return Family(tuple(bodies))


def _circle_params(sides: int) -> list[Fraction]:
    # t = tan(theta/2) maps to the exact rational circle point ((1-t^2)/(1+t^2), 2t/(1+t^2))
    ts = set()
    for j in range(sides):
        theta = -math.pi + 2 * math.pi * (j + 0.5) / sides
        ts.add(Fraction(math.tan(theta / 2)).limit_denominator(64))
    return sorted(ts)


def disc_polygons(n: int, seed: int = 0, grid: int = 20, radius: int = 6, sides: int = 8) -> Family:
    """Discs of integer radius approximated by inscribed polygons with exact rational vertices."""
    if sides < 3:
        raise PreconditionError("sides must be >= 3")
    rng = random.Random(seed)
    ts = _circle_params(sides)
    bodies = []
    for i in range(n):
        cx, cy = rng.randint(0, grid), rng.randint(0, grid)
        r = rng.randint(1, radius)
        pts = [
            Point(cx + r * (1 - t * t) / (1 + t * t), cy + r * 2 * t / (1 + t * t))
            for t in ts
        ]
        bodies.append(ConvexBody.hull_of(pts, i))
    return Family(tuple(bodies))


def grid_points(rows: int, cols: int, seed: int = 0, random_weights: bool = False) -> WeightedPoints:
    if rows < 1 or cols < 1:
        raise PreconditionError("grid needs rows, cols >= 1")
    rng = random.Random(seed)
    entries = []
    for i in range(rows):
        for j in range(cols):
            w = Fraction(rng.randint(1, 3)) if random_weights else Fraction(1)
            entries.append((pt(j, i), w))
    return WeightedPoints(tuple(entries))


def gen(spec: GenSpec) -> Union[Family, WeightedPoints]:
    kind = Kind(spec.kind)
    if kind is Kind.CROSSING_SEGMENTS:
        return crossing_segments(spec.n, spec.seed, spec.width)
    if kind is Kind.DISJOINT:
        return disjoint(spec.n, spec.seed, spec.vertices)
    if kind is Kind.CONCENTRIC:
        if spec.n < 1:
            raise PreconditionError("concentric needs n >= 1")
        return concentric(spec.n)
    if kind is Kind.SEGMENTS_PLUS_BOXES:
        return segments_plus_boxes(spec.p, spec.q, spec.seed)
    if kind is Kind.RANDOM_POLYGONS:
        if spec.n < 1:
            raise PreconditionError("random-polygons needs n >= 1")
        return random_polygons(spec.n, spec.seed, spec.grid, spec.radius, spec.vertices)
    if kind is Kind.DISC_POLYGONS:
        if spec.n < 1:
            raise PreconditionError("disc-polygons needs n >= 1")
        return disc_polygons(spec.n, spec.seed, spec.grid, spec.radius, spec.sides)
    return grid_points(spec.rows, spec.cols, spec.seed, spec.random_weights)


def triangle_sides() -> Family:
    """Three segments along the sides of a triangle: pairwise meeting, no common point."""
    a, b, c = pt(0, 0), pt(4, 0), pt(0, 4)
    return Family.of([ConvexBody.segment(a, b), ConvexBody.segment(b, c), ConvexBody.segment(c, a)])


def five_cycle_segments() -> Family:
    """Five segments whose intersection graph is a 5-cycle (edges of a pentagram-free pentagon)."""
    corners = [pt(0, 0), pt(4, 0), pt(5, 3), pt(2, 5), pt(-1, 3)]
    segs = []
    for i in range(5):
        a, b = corners[i], corners[(i + 1) % 5]
        # extend each edge slightly past both corners so neighbours cross properly
        d = Point(b.x - a.x, b.y - a.y)
        segs.append(ConvexBody.segment(Point(a.x - d.x / 4, a.y - d.y / 4), Point(b.x + d.x / 4, b.y + d.y / 4)))
    return Family.of(segs)

