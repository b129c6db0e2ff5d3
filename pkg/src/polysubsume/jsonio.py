"""JSON documents for polygons: ``{"outer": [[x, y], ...], "holes": [[[x, y], ...], ...]}``.

Coordinates are written as exact rational strings ("3", "-7/2").  Readers also
accept JSON integers; floats are rejected because they are not exact.
"""

from __future__ import annotations

import json
from typing import Any, Dict

from .exact import Point, format_rational, rational
from .polygon import Polygon, PolygonWithHoles, as_region, make_region


def _ring_out(ring: Polygon):
    return [[format_rational(v[0]), format_rational(v[1])] for v in ring.vertices]


def region_to_dict(q) -> Dict[str, Any]:
    q = as_region(q)
    return {"outer": _ring_out(q.outer), "holes": [_ring_out(h) for h in q.holes]}


def _ring_in(raw):
    if not isinstance(raw, list):
        raise ValueError("a ring must be a list of [x, y] pairs")
    pts = []
    for pair in raw:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ValueError(f"bad coordinate pair {pair!r}")
        pts.append(Point(rational(pair[0]), rational(pair[1])))
    return pts


def region_from_dict(d: Dict[str, Any]) -> PolygonWithHoles:
    """Canonical region from a parsed document (validation is separate)."""
    if not isinstance(d, dict) or "outer" not in d:
        raise ValueError('polygon document needs an "outer" ring')
    return make_region(_ring_in(d["outer"]), [_ring_in(h) for h in d.get("holes", [])])


def dumps(q) -> str:
    return json.dumps(region_to_dict(q), separators=(",", ":"))


def loads(text: str) -> PolygonWithHoles:
    return region_from_dict(json.loads(text))


def save(q, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(q))
        fh.write("\n")


def load(path) -> PolygonWithHoles:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
