"""Geodesic shortest paths in a simple polygon.

``geodesic_path`` runs the funnel algorithm through the sleeve of triangles
between the two query points.  ``visibility_oracle_path`` is an independent
brute-force check (visibility graph plus Dijkstra).  ``triple_orient`` gives
the orientation of three points with respect to geodesics.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import PointOutside
from .exact import Point, orient, rational, signed_area2
from .polygon import Location, Polygon, contains_point
from .triangulation import Triangulation, dual_path, triangulate


@dataclass(frozen=True)
class GeodesicPath:
    vertices: Tuple[Point, ...]
    length: float

    def __len__(self):
        return len(self.vertices)


def _pt(q) -> Point:
    return q if isinstance(q, Point) else Point.of(rational(q[0]), rational(q[1]))


def _length(vs: Sequence[Point]) -> float:
    return sum(math.dist((float(a[0]), float(a[1])), (float(b[0]), float(b[1])))
               for a, b in zip(vs, vs[1:]))


def canonical_path(vs: Sequence[Point]) -> Tuple[Point, ...]:
    """Drop repeated points and interior vertices the path passes straight through."""
    out: List[Point] = []
    for v in vs:
        if out and out[-1] == v:
            continue
        while len(out) >= 2 and orient(out[-2], out[-1], v) == 0:
            out.pop()
        out.append(v)
    return tuple(out)


def _make(vs) -> GeodesicPath:
    vs = canonical_path(vs)
    return GeodesicPath(vs, _length(vs))


def _in_tri(pts, tri, q) -> bool:
    a, b, c = pts[tri[0]], pts[tri[1]], pts[tri[2]]
    return orient(a, b, q) >= 0 and orient(b, c, q) >= 0 and orient(c, a, q) >= 0


def _tangent(buf, lo: int, hi: int, k: int, c) -> int:
    """Funnel ``buf[lo:hi]`` with apex at ``lo + k``: index (relative) seeing ``c``."""
    def neg(j):
        return orient(buf[lo + j], buf[lo + j + 1], c) <= 0

    if k > 0 and neg(k - 1):
        a, b = 0, k - 1
        while a < b:
            mid = (a + b) // 2
            if neg(mid):
                b = mid
            else:
                a = mid + 1
        return a
    m = hi - lo - 1
    if k < m and neg(k):
        a, b = k, m - 1
        while a < b:
            mid = (a + b + 1) // 2
            if neg(mid):
                a = mid
            else:
                b = mid - 1
        return a + 1
    return k


def _walk(buf, lo, k, i, out):
    """Append the funnel vertices from the apex (exclusive) to index ``i``."""
    step = 1 if i > k else -1
    for j in range(k + step, i + step, step):
        out.append(buf[lo + j])


class GeodesicEngine:
    """A polygon with its triangulation, ready for repeated queries."""

    def __init__(self, p: Polygon, t: Optional[Triangulation] = None):
        self.polygon = p
        self.pts = p.vertices
        self.t = t if t is not None else triangulate(p)
        self.coords = p.coords()

    def locate(self, q) -> int:
        tri = self.coords.locate_triangle(self.t.flat, q)
        if tri < 0:
            raise PointOutside(f"point {tuple(q)} is outside the polygon")
        return tri

    def _sleeve(self, a, b) -> Optional[List[int]]:
        """Dual path trimmed so only its ends contain ``a`` and ``b``; None if one triangle holds both."""
        t = self.t
        ta, tb = self.locate(a), self.locate(b)
        if ta == tb or _in_tri(self.pts, t.triangles[ta], b) or _in_tri(self.pts, t.triangles[tb], a):
            return None
        path = dual_path(t, ta, tb)
        i0 = max(i for i, x in enumerate(path) if _in_tri(self.pts, t.triangles[x], a))
        j0 = next(j for j in range(i0, len(path)) if _in_tri(self.pts, t.triangles[path[j]], b))
        if j0 == i0:
            return None
        return path[i0:j0 + 1]

    def path(self, a, b) -> GeodesicPath:
        a, b = _pt(a), _pt(b)
        if a == b:
            self.locate(a)
            return GeodesicPath((a,), 0.0)
        sleeve = self._sleeve(a, b)
        if sleeve is None:
            return _make([a, b])
        t, pts = self.t, self.pts
        size = 2 * len(sleeve) + 8
        buf: List[Point] = [None] * (2 * size)
        lo = size
        u, v = t.shared_edge(sleeve[0], sleeve[1])
        buf[lo:lo + 3] = [pts[u], a, pts[v]]
        hi, k = lo + 3, 1
        ids = [u, -1, v]          # vertex ids of the funnel ends, tracked for the next diagonal
        out = [a]
        for s in range(1, len(sleeve) - 1):
            tri = t.triangles[sleeve[s]]
            fu, fv = ids[0], ids[-1]
            c = next(x for x in tri if x != fu and x != fv)
            nu, nv = t.shared_edge(sleeve[s], sleeve[s + 1])
            i = _tangent(buf, lo, hi, k, pts[c])
            if (nu, nv) == (fu, c):
                # keep the side of the first funnel end
                if i < k:
                    _walk(buf, lo, k, i, out)
                    k = i
                hi = lo + i + 1
                buf[hi] = pts[c]
                hi += 1
                ids = [fu, c]
            else:
                if i > k:
                    _walk(buf, lo, k, i, out)
                    k = i
                lo = lo + i - 1
                buf[lo] = pts[c]
                k = k - i + 1
                ids = [c, fv]
        i = _tangent(buf, lo, hi, k, b)
        _walk(buf, lo, k, i, out)
        out.append(b)
        return _make(out)

    def first_step(self, a, b) -> Point:
        """Second vertex of the geodesic from ``a`` to ``b``."""
        return self.path(a, b).vertices[1]

    def orient(self, a, b, c) -> int:
        return triple_orient(self.polygon, self.t, a, b, c, engine=self)


def geodesic_path(p: Polygon, t: Triangulation, a, b) -> GeodesicPath:
    """Unique shortest path from ``a`` to ``b`` inside ``p`` (funnel algorithm)."""
    return GeodesicEngine(p, t).path(a, b)


# --- oracle ----------------------------------------------------------------


def _vertex_visibility(p: Polygon):
    cache = p.__dict__.get("_visgraph")
    if cache is None:
        c = p.coords()
        cache = [c.visible_from(v, p.vertices) for v in p.vertices]
        object.__setattr__(p, "_visgraph", cache)
    return cache


def visibility_oracle_path(p: Polygon, a, b) -> GeodesicPath:
    """Shortest path by Dijkstra over the visibility graph of {a, b} and the vertices."""
    a, b = _pt(a), _pt(b)
    for q in (a, b):
        if contains_point(p, q) == Location.EXTERIOR:
            raise PointOutside(f"point {tuple(q)} is outside the polygon")
    if a == b:
        return GeodesicPath((a,), 0.0)
    n = len(p)
    nodes = list(p.vertices) + [a, b]
    c = p.coords()
    vv = _vertex_visibility(p)
    va = c.visible_from(a, nodes)
    vb = c.visible_from(b, nodes)
    fl = [(float(q[0]), float(q[1])) for q in nodes]
    src, dst = n, n + 1
    dist = [math.inf] * (n + 2)
    prev = [-1] * (n + 2)
    dist[src] = 0.0
    heap = [(0.0, src)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        if u == dst:
            break
        if u == src:
            nbrs = [w for w in range(n + 2) if va[w] and w != u]
        else:
            nbrs = [w for w in range(n) if vv[u][w] and w != u]
            if vb[u]:
                nbrs.append(dst)
        for w in nbrs:
            nd = d + math.dist(fl[u], fl[w])
            if nd < dist[w]:
                dist[w] = nd
                prev[w] = u
                heapq.heappush(heap, (nd, w))
    if prev[dst] < 0:
        raise PointOutside("target unreachable")
    seq = [dst]
    while seq[-1] != src:
        seq.append(prev[seq[-1]])
    return _make([nodes[i] for i in reversed(seq)])


# --- triple orientation -------------------------------------------------------


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def triple_orient(p: Polygon, t: Triangulation, a, b, c, engine: GeodesicEngine = None) -> int:
    """Orientation (+1 ccw, -1 cw, 0 degenerate) of three points w.r.t. geodesics."""
    eng = engine if engine is not None else GeodesicEngine(p, t)
    a, b, c = _pt(a), _pt(b), _pt(c)
    if a == b or b == c or a == c:
        for q in (a, b, c):
            eng.locate(q)
        return 0
    pts, tris = eng.pts, eng.t.triangles
    loc = {q: eng.locate(q) for q in (a, b, c)}

    def inside(q, tri):
        return _in_tri(pts, tris[tri], q)

    # (1) one triangle holds all three points
    for q in (a, b, c):
        if all(inside(x, loc[q]) for x in (a, b, c)):
            return orient(a, b, c)
    # (2) exactly two points share a triangle: look from that pair toward the third
    for x, y, z in ((b, c, a), (c, a, b), (a, b, c)):
        if inside(y, loc[x]) or inside(x, loc[y]):
            s = orient(x, y, eng.first_step(y, z))
            if s == 0:
                s = orient(x, y, eng.first_step(x, z))
            return s
    # (3.1) one point lies in a triangle on the sleeve between the other two
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        path = dual_path(eng.t, loc[x], loc[z])
        if any(inside(y, tri) for tri in path):
            return orient(eng.first_step(y, x), y, eng.first_step(y, z))
    # (3.2) three branches around a median triangle: cyclic preorder order
    pre = eng.t.preorder()
    pa, pb, pc = pre[loc[a]], pre[loc[b]], pre[loc[c]]
    return 1 if (pa < pb < pc or pb < pc < pa or pc < pa < pb) else -1


def triple_orient_oracle(p: Polygon, a, b, c) -> int:
    """Sign of the area enclosed by the concatenated oracle geodesics a->b->c->a."""
    a, b, c = _pt(a), _pt(b), _pt(c)
    loop: List[Point] = []
    for x, y in ((a, b), (b, c), (c, a)):
        loop.extend(visibility_oracle_path(p, x, y).vertices[:-1])
    return _sign(signed_area2(loop))
