"""Exact rational planar primitives.

Every coordinate is a ``fractions.Fraction``.  Bodies are closed convex
polygons that may degenerate to a segment (2 vertices) or a point (1 vertex).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __repr__(self) -> str:
        return f"Point({format_rational(self.x)}, {format_rational(self.y)})"


def pt(x, y) -> Point:
    """Build a point from anything ``Fraction`` accepts (ints, strings, ...)."""
    return Point(Fraction(x), Fraction(y))


def format_rational(value) -> str:
    """Serialize as ``"num/den"``; the denominator is always written."""
    v = Fraction(value)
    return f"{v.numerator}/{v.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"rationals must be strings like '3/7', got {text!r}")
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc
    return value


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Twice the signed area of triangle oab; > 0 for a left turn."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def convex_hull(points: Iterable[Point]) -> tuple[Point, ...]:
    """Strict convex hull, counterclockwise, starting at the lexicographic minimum.

    Collinear points are dropped, so the result has 1, 2 or >= 3 vertices with
    no three consecutive ones collinear.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)

    def chain(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    return tuple(lower[:-1] + upper[:-1])


@dataclass(frozen=True)
class ConvexBody:
    """A closed convex polygon with exact vertices.

    ``vertices`` is canonical: counterclockwise, starting at the
    lexicographically smallest vertex, with degeneracies collapsed.
    """

    vertices: tuple[Point, ...]
    id: int = 0

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a convex body needs at least one vertex")
        hull = convex_hull(self.vertices)
        if len(hull) != len(self.vertices) or set(hull) != set(self.vertices):
            raise ValueError("vertices are not in strictly convex position")
        object.__setattr__(self, "vertices", hull)

    @classmethod
    def _trusted(cls, hull: tuple[Point, ...], id: int) -> "ConvexBody":
        # caller guarantees ``hull`` came out of convex_hull()
        body = object.__new__(cls)
        object.__setattr__(body, "vertices", hull)
        object.__setattr__(body, "id", id)
        return body

    @classmethod
    def hull_of(cls, points: Iterable, id: int = 0) -> "ConvexBody":
        pts = [p if isinstance(p, Point) else pt(*p) for p in points]
        if not pts:
            raise ValueError("a convex body needs at least one vertex")
        return cls._trusted(convex_hull(pts), id)

    @classmethod
    def segment(cls, a, b, id: int = 0) -> "ConvexBody":
        return cls.hull_of([a, b], id)

    @classmethod
    def box(cls, x0, y0, x1, y1, id: int = 0) -> "ConvexBody":
        return cls.hull_of([(x0, y0), (x1, y0), (x1, y1), (x0, y1)], id)

    @property
    def kind(self) -> str:
        return {1: "point", 2: "segment"}.get(len(self.vertices), "polygon")

    def with_id(self, id: int) -> "ConvexBody":
        return ConvexBody._trusted(self.vertices, id)

    def edges(self) -> list[tuple[Point, Point]]:
        """Boundary pieces: polygon edges, the segment itself, nothing for a point."""
        v = self.vertices
        if len(v) == 1:
            return []
        if len(v) == 2:
            return [(v[0], v[1])]
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def halfplanes(self) -> list[tuple[Fraction, Fraction, Fraction]]:
        """Closed half-planes ``a*x + b*y + c >= 0`` whose intersection is the body."""
        v = self.vertices
        if len(v) == 1:
            (p,) = v
            one, zero = Fraction(1), Fraction(0)
            return [(one, zero, -p.x), (-one, zero, p.x), (zero, one, -p.y), (zero, -one, p.y)]
        if len(v) == 2:
            p, q = v
            dx, dy = q.x - p.x, q.y - p.y
            left = (-dy, dx, dy * p.x - dx * p.y)
            right = (dy, -dx, -(dy * p.x - dx * p.y))
            cap_p = (dx, dy, -(dx * p.x + dy * p.y))
            cap_q = (-dx, -dy, dx * q.x + dy * q.y)
            return [left, right, cap_p, cap_q]
        out = []
        for a, b in self.edges():
            dx, dy = b.x - a.x, b.y - a.y
            out.append((-dy, dx, dy * a.x - dx * a.y))
        return out

    def contains(self, p: Point) -> bool:
        v = self.vertices
        if len(v) == 1:
            return p == v[0]
        if len(v) == 2:
            return on_segment(p, v[0], v[1])
        return all(cross(a, b, p) >= 0 for a, b in self.edges())

    def interior_contains(self, p: Point) -> bool:
        """Strict 2-D interior; empty for points and segments."""
        if len(self.vertices) < 3:
            return False
        return all(cross(a, b, p) > 0 for a, b in self.edges())

    def on_boundary(self, p: Point) -> bool:
        return self.contains(p) and not self.interior_contains(p)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    if cross(a, b, p) != 0:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def _clip(poly: list[Point], hp) -> list[Point]:
    # Sutherland-Hodgman against one closed half-plane; tolerates degenerate input.
    a, b, c = hp
    n = len(poly)
    if n == 0:
        return []
    vals = [a * p.x + b * p.y + c for p in poly]
    if n == 1:
        return poly if vals[0] >= 0 else []
    out = []
    for i in range(n):
        s, e = poly[i], poly[(i + 1) % n]
        fs, fe = vals[i], vals[(i + 1) % n]
        if fs >= 0:
            out.append(s)
        if (fs > 0 and fe < 0) or (fs < 0 and fe > 0):
            t = fs / (fs - fe)
            out.append(Point(s.x + t * (e.x - s.x), s.y + t * (e.y - s.y)))
    return out


def intersect(a: ConvexBody, b: ConvexBody, id: Optional[int] = None) -> Optional[ConvexBody]:
    """Exact intersection of two bodies, or ``None`` when it is empty."""
    poly = list(a.vertices)
    for hp in b.halfplanes():
        poly = _clip(poly, hp)
        if not poly:
            return None
    return ConvexBody._trusted(convex_hull(poly), a.id if id is None else id)


def common_intersection(bodies: Sequence[ConvexBody]) -> Optional[ConvexBody]:
    if not bodies:
        raise ValueError("common_intersection of an empty list")
    acc: Optional[ConvexBody] = bodies[0]
    for body in bodies[1:]:
        acc = intersect(acc, body)
        if acc is None:
            return None
    return acc


def common_point(bodies: Sequence[ConvexBody]) -> Optional[Point]:
    """Lexicographically smallest vertex of the common intersection, if any."""
    inter = common_intersection(bodies)
    if inter is None:
        return None
    return min(inter.vertices)


def segment_intersection(a: Point, b: Point, c: Point, d: Point) -> list[Point]:
    """Points where closed segments ab and cd meet.

    One point for a proper or touching crossing, the two overlap endpoints
    for collinear overlap, and ``[]`` if they miss.
    """
    d1 = cross(c, d, a)
    d2 = cross(c, d, b)
    d3 = cross(a, b, c)
    d4 = cross(a, b, d)
    if d1 == 0 and d2 == 0:
        # collinear (or degenerate); keep the endpoints lying on the other segment
        found = {p for p in (a, b) if on_segment(p, c, d)}
        found |= {p for p in (c, d) if on_segment(p, a, b)}
        return sorted(found)
    if (d1 > 0 and d2 > 0) or (d1 < 0 and d2 < 0):
        return []
    if (d3 > 0 and d4 > 0) or (d3 < 0 and d4 < 0):
        return []
    t = d1 / (d1 - d2)
    return [Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))]


def boundary_crossings(a: ConvexBody, b: ConvexBody) -> set[Point]:
    """All points where the boundary of ``a`` meets the boundary of ``b``."""
    out: set[Point] = set()
    ea, eb = a.edges(), b.edges()
    if not ea or not eb:
        # a point body: its boundary is itself
        if len(a.vertices) == 1 and b.on_boundary(a.vertices[0]):
            out.add(a.vertices[0])
        if len(b.vertices) == 1 and a.on_boundary(b.vertices[0]):
            out.add(b.vertices[0])
        return out
    for p, q in ea:
        for r, s in eb:
            out.update(segment_intersection(p, q, r, s))
    return out


def candidate_points(bodies: Sequence[ConvexBody]) -> list[Point]:
    """Every body vertex plus every pairwise boundary crossing, sorted and deduplicated.

    Any nonempty common intersection of a subfamily has one of its vertices in
    this set, so depth maximization and piercing only need to look here.
    """
    if not bodies:
        raise ValueError("candidate_points needs a non-empty family")
    pts: set[Point] = set()
    for body in bodies:
        pts.update(body.vertices)
    for a, b in combinations(bodies, 2):
        pts.update(boundary_crossings(a, b))
    return sorted(pts)
