"""Polygon data model: canonical cycles, validation, reflex classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Sequence, Tuple

from . import kernels
from .errors import DegeneratePolygon, GeometryError, NotSimple
from .exact import Point, orient, rational, signed_area2


@dataclass(frozen=True, eq=False)
class Polygon:
    """A closed vertex cycle (first vertex not repeated).

    Outer boundaries are stored counterclockwise and holes clockwise, so the
    material is always to the left of each directed edge.
    """

    vertices: Tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self):
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def area2(self):
        return signed_area2(self.vertices)

    def reversed(self) -> "Polygon":
        return Polygon(self.vertices[::-1])

    def coords(self) -> kernels.Coords:
        c = self.__dict__.get("_coords")
        if c is None:
            c = kernels.Coords(self.vertices)
            object.__setattr__(self, "_coords", c)
        return c


@dataclass(frozen=True, eq=False)
class PolygonWithHoles:
    outer: Polygon
    holes: Tuple[Polygon, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "holes", tuple(self.holes))

    def __eq__(self, other):
        return (isinstance(other, PolygonWithHoles) and self.outer == other.outer
                and self.holes == other.holes)

    def __hash__(self):
        return hash((self.outer, self.holes))

    def rings(self) -> List[Polygon]:
        return [self.outer, *self.holes]

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rings())


class Location(str, Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


def _clean_cycle(pts: List[Point]) -> List[Point]:
    """Drop repeated consecutive points and collinear vertices until stable."""
    out = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    changed = True
    while changed and len(out) >= 3:
        changed = False
        stack: List[Point] = []
        for p in out:
            stack.append(p)
            while len(stack) >= 3 and orient(stack[-3], stack[-2], stack[-1]) == 0:
                del stack[-2]
                changed = True
            if len(stack) >= 2 and stack[-1] == stack[-2]:
                stack.pop()
                changed = True
        # wrap-around junctions
        while len(stack) >= 3 and orient(stack[-2], stack[-1], stack[0]) == 0:
            stack.pop()
            changed = True
        while len(stack) >= 3 and orient(stack[-1], stack[0], stack[1]) == 0:
            stack.pop(0)
            changed = True
        while len(stack) > 1 and stack[0] == stack[-1]:
            stack.pop()
            changed = True
        out = stack
    return out


def canonicalize(raw: Sequence, ccw: bool = True) -> Polygon:
    """Canonical cycle: no repeats, no angle-pi vertices, requested orientation.

    Raises DegeneratePolygon if fewer than three non-collinear vertices remain.
    """
    pts = [p if isinstance(p, Point) else Point.of(*p) for p in raw]
    pts = _clean_cycle(pts)
    if len(pts) < 3:
        raise DegeneratePolygon("fewer than 3 non-collinear vertices")
    a2 = signed_area2(pts)
    if a2 == 0:
        raise DegeneratePolygon("zero area")
    if (a2 > 0) != ccw:
        pts.reverse()
    return Polygon(pts)


def make_region(outer: Sequence, holes: Sequence[Sequence] = ()) -> PolygonWithHoles:
    """Canonicalise raw rings into a region (outer ccw, holes cw)."""
    return PolygonWithHoles(canonicalize(outer, ccw=True),
                            tuple(canonicalize(h, ccw=False) for h in holes))


def as_region(q) -> PolygonWithHoles:
    return q if isinstance(q, PolygonWithHoles) else PolygonWithHoles(q, ())


def validate_simple(p) -> None:
    """Raise NotSimple unless the boundary (all rings) is simple.

    For a region also checks that every hole lies strictly inside the outer
    ring and outside every other hole.
    """
    q = as_region(p)
    rings = q.rings()
    pts: List[Point] = []
    ea: List[int] = []
    eb: List[int] = []
    owner = []
    for ri, ring in enumerate(rings):
        base = len(pts)
        m = len(ring)
        pts.extend(ring.vertices)
        for i in range(m):
            ea.append(base + i)
            eb.append(base + (i + 1) % m)
            owner.append((ri, i))
    hit = kernels.first_crossing(pts, ea, eb)
    if hit is not None:
        (r1, i1), (r2, i2) = owner[hit[0]], owner[hit[1]]
        where = "outer" if r1 == r2 == 0 else f"rings {r1},{r2}"
        raise NotSimple(i1, i2, where)
    if len(rings) > 1:
        outer = q.outer
        for hi, h in enumerate(q.holes):
            if point_in_ring(outer, h.vertices[0]) != Location.INTERIOR:
                raise GeometryError(f"hole {hi} is not inside the outer boundary")
            for hj, g in enumerate(q.holes):
                if hj != hi and point_in_ring(g, h.vertices[0]) != Location.EXTERIOR:
                    raise GeometryError(f"hole {hi} lies inside hole {hj}")


def classify_vertices(p: Polygon) -> List[bool]:
    """Per-vertex reflex flags (True = reflex) for a directed cycle.

    Works for outer rings (ccw) and holes (cw) alike: a vertex is reflex in
    the region exactly when the cycle turns right there.
    """
    return p.coords().reflex_flags()


def reflex_points(q) -> List[Point]:
    out = []
    for ring in as_region(q).rings():
        flags = classify_vertices(ring)
        out.extend(v for v, f in zip(ring.vertices, flags) if f)
    return out


_KIND = {kernels.INTERIOR: Location.INTERIOR, kernels.BOUNDARY: Location.BOUNDARY,
         kernels.EXTERIOR: Location.EXTERIOR}


def point_in_ring(ring: Polygon, q) -> Location:
    """Location of ``q`` relative to the region enclosed by one ring."""
    return _KIND[ring.coords().locate_point((rational(q[0]), rational(q[1])))[0]]


def contains_point(p, q) -> Location:
    """Exact interior/boundary/exterior classification of ``q`` in a region."""
    region = as_region(p)
    where = point_in_ring(region.outer, q)
    if where != Location.INTERIOR:
        return where
    for h in region.holes:
        w = point_in_ring(h, q)
        if w == Location.BOUNDARY:
            return w
        if w == Location.INTERIOR:
            return Location.EXTERIOR
    return Location.INTERIOR
