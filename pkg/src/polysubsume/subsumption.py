"""Subsuming polygons: simplify convex chains while keeping every reflex vertex.

The outer boundary is split into pockets (each cut into a pointed
pseudo-triangulation whose side chains are simplified) and hull chains
(simplified directly, split once at v* if they turn too far).  Every hole is
handled as a simple polygon of its own and shrinks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import CannotSplit, ChainNotHullHonest, InvariantError, NotSimplifiable
from .exact import Point, Ray, orient, ray_intersection
from .hull import convex_hull, extract_pockets
from .polygon import Polygon, PolygonWithHoles, _clean_cycle, as_region, classify_vertices, validate_simple
from .pseudotri import PointedPT, build_pointed_pt, side_chains
from .triangulation import triangulate


@dataclass(frozen=True)
class Chain:
    vertices: Tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(
            v if isinstance(v, Point) else Point.of(*v) for v in self.vertices))
        if len(self.vertices) < 2:
            raise ValueError("a chain needs at least two vertices")

    def __len__(self):
        return len(self.vertices)

    @property
    def k(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ChainReplacement:
    """One simplified chain, stored both implicitly (first/last) and explicitly."""

    first: Point
    last: Point
    original_interior_count: int
    replacement: Tuple[Point, ...]
    ring: int = 0
    origin: str = "pocket"


@dataclass
class UnitPT:
    """A pocket or hole together with its pointed pseudo-triangulation."""

    kind: str
    polygon: Polygon
    index_map: Tuple[int, ...]
    pt: PointedPT

    @property
    def convex_count(self) -> int:
        return self.pt.convex_count


@dataclass
class SubsumptionResult:
    region: PolygonWithHoles
    replacements: List[ChainReplacement]
    report: Dict[str, object]
    units: List[UnitPT] = field(default_factory=list, repr=False)


def _as_chain(c) -> Chain:
    return c if isinstance(c, Chain) else Chain(tuple(c))


def turn_sign(c) -> int:
    """Common sign of all interior turns; raises ChainNotHullHonest otherwise."""
    v = _as_chain(c).vertices
    sign = 0
    for i in range(1, len(v) - 1):
        o = orient(v[i - 1], v[i], v[i + 1])
        if o == 0 or (sign and o != sign):
            raise ChainNotHullHonest(f"inconsistent turn at chain vertex {i}")
        sign = o
    return sign


def _half(d) -> int:
    return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1


def _check_hull_honest(v: Sequence[Point]) -> int:
    sign = turn_sign(Chain(tuple(v)))
    if len(v) <= 3 or sign == 0:
        return sign
    # consistent turning is hull-honest iff the directions sweep less than a full turn
    dirs = [(v[i + 1][0] - v[i][0], v[i + 1][1] - v[i][1]) for i in range(len(v) - 1)]
    d0 = dirs[0]
    passed = False
    for d in dirs[1:]:
        c = d0[0] * d[1] - d0[1] * d[0]
        behind = c * sign < 0 or (c == 0 and d0[0] * d[0] + d0[1] * d[1] < 0)
        if behind:
            passed = True
        elif passed:
            raise ChainNotHullHonest("chain turns through a full revolution")
    return sign


def is_simplifiable(c) -> bool:
    """True iff the chain has at most 3 vertices or its two end rays intersect."""
    v = _as_chain(c).vertices
    _check_hull_honest(v)
    if len(v) <= 3:
        return True
    return ray_intersection(Ray(v[0], v[1]), Ray(v[-1], v[-2])) is not None


def simplify_chain(c) -> Chain:
    """``<v1, m, vk>`` with m the end-ray intersection (chains of <= 3 unchanged)."""
    c = _as_chain(c)
    v = c.vertices
    _check_hull_honest(v)
    if len(v) <= 3:
        return c
    m = ray_intersection(Ray(v[0], v[1]), Ray(v[-1], v[-2]))
    if m is None:
        raise NotSimplifiable("end rays do not intersect")
    return Chain((v[0], m, v[-1]))


def _vstar_index(v: Sequence[Point], sign: int) -> Optional[int]:
    """Smallest s whose prefix d_1..d_s turns by at least 180 degrees."""
    d0 = (v[1][0] - v[0][0], v[1][1] - v[0][1])
    for s in range(1, len(v) - 1):
        d = (v[s + 1][0] - v[s][0], v[s + 1][1] - v[s][1])
        c = d0[0] * d[1] - d0[1] * d[0]
        if c * sign < 0 or (c == 0 and d0[0] * d[0] + d0[1] * d[1] < 0):
            return s
    return None


def split_at_vstar(c) -> Tuple[Chain, Chain]:
    """Split a non-simplifiable hull-honest chain into two simplifiable parts."""
    v = _as_chain(c).vertices
    sign = _check_hull_honest(v)
    s = _vstar_index(v, sign) if sign else None
    if s is None:
        raise CannotSplit("chain turns by less than 180 degrees")
    return Chain(v[:s + 1]), Chain(v[s:])


# --- pipeline -------------------------------------------------------------


def _runs(chain: Sequence[int], original) -> List[List[int]]:
    """Maximal subchains made only of edges accepted by ``original``."""
    out: List[List[int]] = []
    cur = [chain[0]]
    for u, w in zip(chain, chain[1:]):
        if original(u, w):
            cur.append(w)
        else:
            if len(cur) > 1:
                out.append(cur)
            cur = [w]
    if len(cur) > 1:
        out.append(cur)
    return out


def _face_runs(pt: PointedPT, lid: Optional[Tuple[int, int]]) -> List[List[int]]:
    m = len(pt.polygon)
    support = {frozenset(d) for d in pt.diagonals}
    if lid is not None:
        support.add(frozenset(lid))

    def original(u, w):
        return (u - w) % m in (1, m - 1) and frozenset((u, w)) not in support

    runs = []
    for f in pt.faces:
        for ch in side_chains(f):
            runs.extend(_runs(ch, original))
    return runs


def _middle(pts: Sequence[Point], run: Sequence[int]) -> Optional[Point]:
    if len(run) <= 3:
        return None
    v = [pts[i] for i in run]
    m = ray_intersection(Ray(v[0], v[1]), Ray(v[-1], v[-2]))
    if m is None:
        raise InvariantError("side chain run is not simplifiable")
    return m


def _hull_chain_parts(pts, idx: Sequence[int]) -> List[List[int]]:
    """A hull chain as simplifiable pieces, splitting repeatedly at v*.

    In general position one split suffices; when both lid endpoints sit on
    hull edges the chain can turn exactly 360 degrees and needs a second one.
    """
    parts = []
    rest = list(idx)
    while len(rest) > 3:
        s = _vstar_index([pts[i] for i in rest], 1)
        if s is None:
            break
        parts.append(rest[:s + 1])
        rest = rest[s:]
    parts.append(rest)
    return parts


def _closed_convex_parts(pts, n: int) -> List[List[int]]:
    """Cover a convex cycle by consecutive pieces each turning less than 180 degrees."""
    def d(k):
        a, b = pts[k % n], pts[(k + 1) % n]
        return (b[0] - a[0], b[1] - a[1])

    parts = []
    s = 0
    while s < n:
        d0 = d(s)
        e = s + 1
        while e < n:
            de = d(e)
            if d0[0] * de[1] - d0[1] * de[0] <= 0:
                break
            e += 1
        parts.append([k % n for k in range(s, e + 1)])
        s = e
    return parts


class _Assembler:
    """Collects index-range replacements for one ring and rebuilds it."""

    def __init__(self, ring: Polygon):
        self.ring = ring
        self.n = len(ring)
        self.jump: Dict[int, Tuple[int, Point]] = {}

    def add(self, a: int, b: int, mid: Point):
        """Replace the open index range a..b (forward, cyclic) by ``mid``."""
        if a in self.jump:
            raise InvariantError("overlapping chain replacements")
        self.jump[a] = (b, mid)

    def build(self) -> List[Point]:
        n = self.n
        covered = [False] * n
        for a, (b, _) in self.jump.items():
            k = (a + 1) % n
            while k != b:
                if covered[k]:
                    raise InvariantError("overlapping chain replacements")
                covered[k] = True
                k = (k + 1) % n
        start = next(i for i in range(n) if not covered[i])
        out = []
        i = start
        while True:
            out.append(self.ring[i])
            if i in self.jump:
                b, mid = self.jump[i]
                out.append(mid)
                i = b
            else:
                i = (i + 1) % n
            if i == start:
                break
        return out


def _record(reps, ring_pts, run, mid, ring_no, origin):
    reps.append(ChainReplacement(ring_pts[run[0]], ring_pts[run[-1]], len(run) - 2,
                                 (ring_pts[run[0]], mid, ring_pts[run[-1]]), ring_no, origin))


def _subsume_outer(outer: Polygon, reps, units) -> Tuple[List[Point], int, int]:
    pts = outer.vertices
    n = len(pts)
    hull = convex_hull(outer)
    pockets, chains = extract_pockets(outer, hull)
    asm = _Assembler(outer)
    support = 0
    for pk in pockets:
        idx = pk.polygon_indices()
        poly = Polygon([pts[i] for i in idx])
        pt = build_pointed_pt(poly, triangulate(poly), 0)
        units.append(UnitPT("pocket", poly, tuple(idx), pt))
        support += 1 + len(pt.diagonals)
        for run in _face_runs(pt, (0, 1)):
            mid = _middle(poly.vertices, run)
            if mid is None:
                continue
            _record(reps, poly.vertices, run, mid, 0, "pocket")
            # pocket order runs against the ring, so the ring range is last -> first
            asm.add(idx[run[-1]], idx[run[0]], mid)
    splits = 0
    if pockets:
        pieces = []
        for ch in chains:
            parts = _hull_chain_parts(pts, ch.indices)
            splits += len(parts) - 1
            pieces.extend(parts)
    else:
        pieces = _closed_convex_parts(pts, n)
    for run in pieces:
        if len(run) <= 3:
            continue
        v = [pts[i] for i in run]
        mid = ray_intersection(Ray(v[0], v[1]), Ray(v[-1], v[-2]))
        if mid is None:
            raise InvariantError("hull chain piece is not simplifiable")
        _record(reps, pts, run, mid, 0, "hull")
        asm.add(run[0], run[-1], mid)
    return asm.build(), len(pockets), support


def _subsume_hole(hole: Polygon, ring_no: int, reps, units) -> Tuple[List[Point], int]:
    """Shrink one (clockwise) hole; returns the new clockwise cycle."""
    inner = hole.reversed()                 # the hole's interior as a ccw polygon
    pts = inner.vertices
    m = len(pts)
    source = next(i for i in range(m) if orient(pts[i - 1], pts[i], pts[(i + 1) % m]) > 0)
    pt = build_pointed_pt(inner, triangulate(inner), source)
    units.append(UnitPT("hole", inner, tuple(m - 1 - i for i in range(m)), pt))
    asm = _Assembler(inner)
    for run in _face_runs(pt, None):
        mid = _middle(pts, run)
        if mid is None:
            continue
        _record(reps, pts, run, mid, ring_no, "hole")
        asm.add(run[0], run[-1], mid)
    return asm.build()[::-1], len(pt.diagonals)


def _convex_total(region: PolygonWithHoles) -> int:
    return sum(len(r) - sum(classify_vertices(r)) for r in region.rings())


def subsume(q, validate: bool = True) -> SubsumptionResult:
    """Subsuming polygon with O(r) vertices and the same reflex vertices."""
    q = as_region(q)
    if validate:
        validate_simple(q)
    r = sum(sum(classify_vertices(ring)) for ring in q.rings())
    report = {"n": q.n, "r": r, "pockets": 0, "support_edges": 0,
              "convex_out": _convex_total(q), "total_out": q.n,
              "holes": len(q.holes), "warning_r_zero": r == 0}
    if r == 0:
        return SubsumptionResult(q, [], report, [])
    reps: List[ChainReplacement] = []
    units: List[UnitPT] = []
    outer_pts, npockets, support = _subsume_outer(q.outer, reps, units)
    holes = []
    for hi, h in enumerate(q.holes):
        cyc, diags = _subsume_hole(h, hi + 1, reps, units)
        support += diags
        holes.append(Polygon(_clean_cycle(cyc)))
    region = PolygonWithHoles(Polygon(_clean_cycle(outer_pts)), tuple(holes))
    report.update(pockets=npockets, support_edges=support,
                  convex_out=_convex_total(region), total_out=region.n)
    return SubsumptionResult(region, reps, report, units)
