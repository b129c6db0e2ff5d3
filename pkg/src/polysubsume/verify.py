"""Independent checks of a subsumption result.

Each check returns a (name, ok, detail) triple; ``verify`` runs them all and
is what the ``verify`` CLI verb prints.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from .errors import GeometryError, InvariantError
from .exact import Point, Ray, on_segment, orient, ray_intersection
from .geodesic import GeodesicEngine, visibility_oracle_path
from .generate import sample_points
from .polygon import Location, Polygon, as_region, contains_point, point_in_ring, reflex_points, validate_simple
from .pseudotri import check_pointed, separating_wedge_ok, side_chains
from .subsumption import SubsumptionResult, subsume


def _bbox(edges):
    a = np.array([[float(p[0]), float(p[1]), float(q[0]), float(q[1])] for p, q in edges])
    lo = np.minimum(a[:, :2], a[:, 2:])
    hi = np.maximum(a[:, :2], a[:, 2:])
    return lo, hi


def proper_crossings(edges_a: Sequence, edges_b: Sequence, limit: int = 1) -> List[Tuple[int, int]]:
    """Pairs of edges whose relative interiors cross transversally (exact test).

    Boxes are compared in floating point with a small slack only to discard
    pairs; every reported pair is confirmed with exact orientation tests.
    """
    if not edges_a or not edges_b:
        return []
    la, ha = _bbox(edges_a)
    lb, hb = _bbox(edges_b)
    scale = max(1.0, float(np.abs(np.concatenate([la, ha, lb, hb])).max()))
    eps = 1e-9 * scale
    out = []
    for i, (p, q) in enumerate(edges_a):
        cand = np.nonzero((lb[:, 0] <= ha[i, 0] + eps) & (hb[:, 0] >= la[i, 0] - eps)
                          & (lb[:, 1] <= ha[i, 1] + eps) & (hb[:, 1] >= la[i, 1] - eps))[0]
        for j in cand:
            s, t = edges_b[j]
            if orient(p, q, s) * orient(p, q, t) < 0 and orient(s, t, p) * orient(s, t, q) < 0:
                out.append((i, int(j)))
                if len(out) >= limit:
                    return out
    return out


class _Touch:
    """Vertices of ``ring`` lying on query segments, with a float box prefilter."""

    def __init__(self, ring: Polygon):
        self.vertices = ring.vertices
        self.xs = np.array([float(v[0]) for v in ring.vertices])
        self.ys = np.array([float(v[1]) for v in ring.vertices])
        self.eps = 1e-9 * max(1.0, float(np.abs(self.xs).max()), float(np.abs(self.ys).max()))

    def stops(self, p, q):
        """Ring vertices on the closed segment pq plus p and q, ordered from p to q."""
        e = self.eps
        lo_x, hi_x = sorted((float(p[0]), float(q[0])))
        lo_y, hi_y = sorted((float(p[1]), float(q[1])))
        cand = np.nonzero((self.xs >= lo_x - e) & (self.xs <= hi_x + e)
                          & (self.ys >= lo_y - e) & (self.ys <= hi_y + e))[0]
        dx, dy = q[0] - p[0], q[1] - p[1]
        hits = {self.vertices[k] for k in cand if on_segment(p, q, self.vertices[k])}
        return sorted(hits | {p, q}, key=lambda v: (v[0] - p[0]) * dx + (v[1] - p[1]) * dy)


def _ring_inside(inner: Polygon, outer: Polygon) -> bool:
    """Closed region of ``inner`` inside the closed region of ``outer`` (exact).

    With no proper crossings, the pieces of an inner edge between consecutive
    touching points of ``outer`` lie wholly inside or wholly outside.  A piece
    with a strictly interior end is inside; the rest are decided by one midpoint.
    """
    loc = {}
    for v in inner.vertices:
        loc[v] = point_in_ring(outer, v)
        if loc[v] == Location.EXTERIOR:
            return False
    if proper_crossings(outer.edges(), inner.edges()):
        return False
    touch = _Touch(outer)
    # midpoints are tested as a + b against the doubled ring to stay integral
    doubled = None
    for p, q in inner.edges():
        if loc[p] == Location.INTERIOR and loc[q] == Location.INTERIOR:
            continue
        stops = touch.stops(p, q)
        for a, b in zip(stops, stops[1:]):
            if loc.get(a) == Location.INTERIOR or loc.get(b) == Location.INTERIOR:
                continue
            if doubled is None:
                doubled = Polygon(tuple(Point(2 * v[0], 2 * v[1]) for v in outer.vertices))
            if point_in_ring(doubled, Point(a[0] + b[0], a[1] + b[1])) == Location.EXTERIOR:
                return False
    return True


def contains_region(big, small) -> bool:
    """True if region ``small`` lies inside region ``big`` (exact)."""
    big, small = as_region(big), as_region(small)
    if not _ring_inside(small.outer, big.outer):
        return False
    # every hole of ``big`` must sit inside a hole of ``small``
    return all(any(_ring_inside(h, g) for g in small.holes) for h in big.holes)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name, ok, detail=""):
        self.checks.append(Check(name, bool(ok), detail))

    def lines(self) -> List[str]:
        return [f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else "")
                for c in self.checks]


def check_units(res: SubsumptionResult, report: VerifyReport) -> None:
    """Counting, pointedness and side-chain checks for every pocket and hole."""
    r = res.report["r"]
    pockets = [u for u in res.units if u.kind == "pocket"]
    ident = len(pockets) + sum(u.convex_count - 3 for u in pockets)
    r_outer = sum(1 for v in reflex_points(res.region.outer))
    report.add("support identity p + sum(c_i - 3) = r_outer", ident == r_outer or r == 0,
               f"{ident} vs {r_outer}")
    counts_ok = True
    wedge_ok = True
    simp_ok = True
    for u in res.units:
        pt = u.pt
        c = u.convex_count
        if len(pt.faces) != c - 2 or len(pt.diagonals) != c - 3:
            counts_ok = False
        try:
            check_pointed(u.polygon.vertices, pt.diagonals)
        except InvariantError:
            counts_ok = False
        pts = u.polygon.vertices
        for f in pt.faces:
            for w, ch in enumerate(side_chains(f)):
                if len(ch) >= 4 and ray_intersection(Ray(pts[ch[0]], pts[ch[1]]),
                                                     Ray(pts[ch[-1]], pts[ch[-2]])) is None:
                    simp_ok = False
                if not separating_wedge_ok(pts, f, w):
                    wedge_ok = False
    report.add("pseudo-triangulations: c-2 faces, c-3 diagonals, pointed", counts_ok)
    report.add("side chains simplifiable", simp_ok)
    report.add("separating wedges", wedge_ok)


def verify(q, pairs: int = 20, seed: int = 0, oracle_limit: int = 400) -> VerifyReport:
    """Run the invariant suite for one instance."""
    q = as_region(q)
    report = VerifyReport()
    validate_simple(q)
    res = subsume(q, validate=False)
    out = res.region
    rep = res.report
    try:
        validate_simple(out)
        report.add("output simple", True)
    except GeometryError as e:
        report.add("output simple", False, str(e))
    report.add("reflex vertices identical",
               Counter(reflex_points(q)) == Counter(reflex_points(out)))
    report.add("P inside P'", contains_region(out, q))
    report.add("hole count preserved", len(out.holes) == len(q.holes))
    r = rep["r"]
    if r > 0:
        report.add("convex_out <= 6r + 2", rep["convex_out"] <= 6 * r + 2,
                   f"{rep['convex_out']} vs {6 * r + 2}")
        report.add("total_out <= 7r + 2", rep["total_out"] <= 7 * r + 2,
                   f"{rep['total_out']} vs {7 * r + 2}")
    check_units(res, report)
    if pairs and not q.holes:
        rng = random.Random(seed)
        e1 = GeodesicEngine(q.outer)
        e2 = GeodesicEngine(out.outer)
        pts = sample_points(q.outer, rng, 2 * pairs, e1.t.triangles)
        use_oracle = len(q.outer) <= oracle_limit
        bad = 0
        for i in range(pairs):
            a, b = pts[2 * i], pts[2 * i + 1]
            p1 = e1.path(a, b).vertices
            p2 = e2.path(a, b).vertices
            ok = p1 == p2
            if ok and use_oracle:
                ok = p1 == visibility_oracle_path(q.outer, a, b).vertices
            bad += not ok
        report.add("geodesics preserved" + (" (oracle checked)" if use_oracle else ""),
                   bad == 0, f"{pairs - bad}/{pairs} pairs")
    return report


def point_in_closed_region(q, p) -> bool:
    return contains_point(q, p) != Location.EXTERIOR
