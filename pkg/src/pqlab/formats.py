"""Family/point file formats and report serialization.

Family file (JSON)::

    {"format": "pqlab.family", "version": 1,
     "bodies": [[["0/1", "0/1"], ["1/1", "0/1"], ...], ...],
     "ids": [0, 1, ...],            # optional, defaults to 0..n-1
     "metadata": {...}}             # optional

Point file (JSON)::

    {"format": "pqlab.points", "version": 1,
     "points": [["x", "y", "weight"], ...],
     "metadata": {...}}

Every rational is a ``"num/den"`` string.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from enum import Enum
from fractions import Fraction
from typing import Any

from .family import Family
from .geometry import ConvexBody, Point, convex_hull, format_rational, parse_rational
from .nets import WeightedPoints

FAMILY_FORMAT = "pqlab.family"
POINTS_FORMAT = "pqlab.points"
VERSION = 1


class FormatError(ValueError):
    """Malformed input file; ``where`` locates the problem."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


def _point_out(p: Point) -> list[str]:
    return [format_rational(p.x), format_rational(p.y)]


def family_to_dict(family: Family, metadata: dict | None = None) -> dict:
    doc = {
        "format": FAMILY_FORMAT,
        "version": VERSION,
        "bodies": [[_point_out(v) for v in b.vertices] for b in family],
        "ids": list(family.ids),
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def emit_family(family: Family, metadata: dict | None = None) -> str:
    return dumps(family_to_dict(family, metadata))


def points_to_dict(points: WeightedPoints, metadata: dict | None = None) -> dict:
    doc = {
        "format": POINTS_FORMAT,
        "version": VERSION,
        "points": [_point_out(p) + [format_rational(w)] for p, w in points.entries],
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def emit_points(points: WeightedPoints, metadata: dict | None = None) -> str:
    return dumps(points_to_dict(points, metadata))


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno} column {exc.colno}", exc.msg) from exc
    if not isinstance(doc, dict):
        raise FormatError("top level", "expected a JSON object")
    return doc


def _check_header(doc: dict, expected: str) -> None:
    if doc.get("format") != expected:
        raise FormatError("format", f"expected {expected!r}, got {doc.get('format')!r}")
    if doc.get("version") != VERSION:
        raise FormatError("version", f"unsupported version {doc.get('version')!r}")


def _rational(value, where: str) -> Fraction:
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise FormatError(where, str(exc)) from exc


def _point_in(pair, where: str) -> Point:
    if not isinstance(pair, list) or len(pair) != 2:
        raise FormatError(where, "expected a pair [x, y]")
    return Point(_rational(pair[0], f"{where}[0]"), _rational(pair[1], f"{where}[1]"))


def parse_family(text: str) -> tuple[Family, dict]:
    """Parse a family file; returns the family and its metadata."""
    doc = _load_json(text)
    _check_header(doc, FAMILY_FORMAT)
    raw = doc.get("bodies")
    if not isinstance(raw, list) or not raw:
        raise FormatError("bodies", "expected a non-empty list of bodies")
    ids = doc.get("ids", list(range(len(raw))))
    if not isinstance(ids, list) or len(ids) != len(raw) or not all(isinstance(i, int) and not isinstance(i, bool) for i in ids):
        raise FormatError("ids", "expected one integer id per body")
    if len(set(ids)) != len(ids):
        raise FormatError("ids", "ids must be unique")
    bodies = []
    for bi, verts in enumerate(raw):
        where = f"bodies[{bi}]"
        if not isinstance(verts, list) or not verts:
            raise FormatError(where, "expected a non-empty list of vertices")
        pts = [_point_in(v, f"{where}[{vi}]") for vi, v in enumerate(verts)]
        hull = convex_hull(pts)
        if len(hull) != len(pts) or set(hull) != set(pts):
            raise FormatError(where, "vertices must be distinct and in strictly convex position")
        bodies.append(ConvexBody(hull, ids[bi]))
    meta = doc.get("metadata", {})
    if not isinstance(meta, dict):
        raise FormatError("metadata", "expected an object")
    return Family(tuple(bodies)), meta


def parse_points(text: str) -> tuple[WeightedPoints, dict]:
    doc = _load_json(text)
    _check_header(doc, POINTS_FORMAT)
    raw = doc.get("points")
    if not isinstance(raw, list) or not raw:
        raise FormatError("points", "expected a non-empty list")
    entries = []
    for i, row in enumerate(raw):
        where = f"points[{i}]"
        if not isinstance(row, list) or len(row) not in (2, 3):
            raise FormatError(where, "expected [x, y] or [x, y, weight]")
        p = _point_in(row[:2], where)
        w = _rational(row[2], f"{where}[2]") if len(row) == 3 else Fraction(1)
        if w <= 0:
            raise FormatError(f"{where}[2]", "weights must be positive")
        entries.append((p, w))
    meta = doc.get("metadata", {})
    return WeightedPoints(tuple(entries)), meta if isinstance(meta, dict) else {}


def jsonable(obj: Any) -> Any:
    """Convert results to JSON-ready values; rationals become ``"num/den"``."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Point):
        return _point_out(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (int, str, float)):
        return obj
    if isinstance(obj, ConvexBody):
        return {"id": obj.id, "vertices": [_point_out(v) for v in obj.vertices]}
    if isinstance(obj, Family):
        return [jsonable(b) for b in obj]
    if isinstance(obj, WeightedPoints):
        return [_point_out(p) + [format_rational(w)] for p, w in obj.entries]
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def flatten(obj: Any, prefix: str = "") -> list[tuple[str, str]]:
    """Dotted-key rows for CSV output of an already jsonable value."""
    if isinstance(obj, dict):
        rows = []
        for k in obj:
            rows += flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
        return rows
    if isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        rows = []
        for i, v in enumerate(obj):
            rows += flatten(v, f"{prefix}[{i}]")
        return rows
    if isinstance(obj, list):
        return [(prefix, " ".join("" if v is None else str(v) for v in obj))]
    return [(prefix, "" if obj is None else str(obj).lower() if isinstance(obj, bool) else str(obj))]


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    w.writerows(flatten(report))
    return buf.getvalue()
