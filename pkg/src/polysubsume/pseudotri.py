"""Shortest path trees and the pointed pseudo-triangulations they induce."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import InvariantError, NotPointed
from .exact import Point, cross, orient
from .polygon import Polygon
from .triangulation import Triangulation, polygon_faces, rotation_system


@dataclass(frozen=True)
class ShortestPathTree:
    source: int
    parent: Tuple[int, ...]

    @property
    def edges(self) -> List[Tuple[int, int]]:
        return [(p, v) for v, p in enumerate(self.parent) if p >= 0]

    def path(self, v: int) -> List[int]:
        """Vertex indices from the source to ``v``."""
        out = [v]
        while self.parent[out[-1]] >= 0:
            out.append(self.parent[out[-1]])
        return out[::-1]


def _tangent(pts, f: List[int], k: int, c) -> int:
    """Index in funnel ``f`` (apex ``k``) of the vertex from which ``c`` is seen."""
    def neg(j):
        return orient(pts[f[j]], pts[f[j + 1]], c) <= 0

    # west chain: g_j > 0 ... then <= 0; answer is the first nonpositive j
    if k > 0 and neg(k - 1):
        lo, hi = 0, k - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if neg(mid):
                hi = mid
            else:
                lo = mid + 1
        return lo
    # east chain: g_j <= 0 ... then > 0; answer is one past the last nonpositive j
    m = len(f) - 1
    if k < m and neg(k):
        lo, hi = k, m - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if neg(mid):
                lo = mid
            else:
                hi = mid - 1
        return lo + 1
    return k


def _third(tri, a, b):
    for v in tri:
        if v != a and v != b:
            return v
    raise InvariantError("degenerate triangle")


def shortest_path_tree(p, t: Triangulation, source: int) -> ShortestPathTree:
    """SPT of ``source`` by funnel splitting over the dual tree (explicit stack)."""
    pts = p.vertices if isinstance(p, Polygon) else t.points
    n = len(pts)
    parent = [-1] * n
    et = t.edge_tri
    stack = []
    # fan of triangles around the source, starting at edge (s, s+1)
    s = source
    x = (s + 1) % n
    while True:
        tri = et[(s, x)]
        y = _third(t.triangles[tri], s, x)
        parent[x] = s
        parent[y] = s
        if (y, x) in et:
            stack.append(([y, s, x], 1))
        if y == (s - 1) % n:
            break
        x = y
    while stack:
        f, k = stack.pop()
        a, b = f[0], f[-1]
        c = _third(t.triangles[et[(a, b)]], a, b)
        i = _tangent(pts, f, k, pts[c])
        parent[c] = f[i]
        if (a, c) in et:
            stack.append((f[:i + 1] + [c], i if i <= k else k))
        if (c, b) in et:
            stack.append(([c] + f[i:], 1 if i >= k else 1 + k - i))
    return ShortestPathTree(source, tuple(parent))


@dataclass(frozen=True)
class PseudoTriangle:
    """A face as a ccw index cycle, with its three corner positions."""

    cycle: Tuple[int, ...]
    corner_pos: Tuple[int, int, int]

    @property
    def corners(self) -> Tuple[int, int, int]:
        return tuple(self.cycle[k] for k in self.corner_pos)

    @property
    def side_chains(self) -> List[List[int]]:
        return side_chains(self)


def side_chains(f: PseudoTriangle) -> List[List[int]]:
    """The three chains between consecutive corners (vertex indices, ccw)."""
    m = len(f.cycle)
    out = []
    for t in range(3):
        a, b = f.corner_pos[t], f.corner_pos[(t + 1) % 3]
        if b <= a:
            b += m
        out.append([f.cycle[k % m] for k in range(a, b + 1)])
    return out


@dataclass(frozen=True)
class PointedPT:
    polygon: Polygon
    spt: ShortestPathTree
    diagonals: Tuple[Tuple[int, int], ...]
    faces: Tuple[PseudoTriangle, ...]

    @property
    def convex_count(self) -> int:
        v = self.polygon.vertices
        n = len(v)
        return sum(1 for i in range(n) if orient(v[i - 1], v[i], v[(i + 1) % n]) > 0)


def _as_pseudo_triangle(pts, cyc: List[int]) -> PseudoTriangle:
    m = len(cyc)
    convex = [k for k in range(m)
              if orient(pts[cyc[k - 1]], pts[cyc[k]], pts[cyc[(k + 1) % m]]) > 0]
    if len(convex) != 3:
        raise NotPointed(f"face with {len(convex)} convex vertices")
    first = min(range(m), key=lambda k: cyc[k])
    cyc = cyc[first:] + cyc[:first]
    pos = tuple(sorted((k - first) % m for k in convex))
    return PseudoTriangle(tuple(cyc), pos)


def check_pointed(pts: Sequence[Point], diagonals) -> None:
    """Raise NotPointed unless every vertex has an incident angle above 180 degrees."""
    rot = rotation_system(pts, diagonals)
    for v, nb in enumerate(rot):
        if len(nb) == 2:
            continue
        pv = pts[v]
        ok = False
        for j in range(len(nb)):
            u, w = nb[j - 1], nb[j]   # gap from nb[j-1] ccw to nb[j]; j=0 is the exterior gap
            if j == 0:
                u, w = nb[-1], nb[0]
            if orient(pv, pts[u], pts[w]) < 0:
                ok = True
                break
        if not ok:
            raise NotPointed(f"vertex {v} is not pointed")


def convex_tree_edges(pts, spt: ShortestPathTree) -> List[Tuple[int, int]]:
    """Edges of the SPT lying on a shortest path from the source to a convex vertex.

    A path that ends at a reflex vertex may cut its reflex angle into two
    angles below 180 degrees, so reflex leaves are pruned repeatedly.
    """
    n = len(pts)
    keep = [False] * n
    for v in range(n):
        if orient(pts[v - 1], pts[v], pts[(v + 1) % n]) > 0:
            u = v
            while u >= 0 and not keep[u]:
                keep[u] = True
                u = spt.parent[u]
    return [(spt.parent[v], v) for v in range(n) if keep[v] and spt.parent[v] >= 0]


def pointed_pt(p: Polygon, spt: ShortestPathTree) -> PointedPT:
    """Faces of the polygon cut by the shortest paths from the source to convex vertices."""
    pts = p.vertices
    n = len(pts)
    diags = []
    for u, v in convex_tree_edges(pts, spt):
        if (u - v) % n not in (1, n - 1):
            diags.append((min(u, v), max(u, v)))
    diags.sort()
    check_pointed(pts, diags)
    cycles = polygon_faces(pts, diags) if diags else [list(range(n))]
    faces = sorted((_as_pseudo_triangle(pts, c) for c in cycles), key=lambda f: f.cycle[0])
    return PointedPT(p, spt, tuple(diags), tuple(faces))


def chain_turn_consistent(pts, chain: Sequence[int]) -> bool:
    """All interior turns of the chain share one sign (and none is zero)."""
    signs = {orient(pts[chain[k - 1]], pts[chain[k]], pts[chain[k + 1]])
             for k in range(1, len(chain) - 1)}
    return len(signs) <= 1 and 0 not in signs


def _bisector_side(c, nxt, prv, q) -> int:
    """Exact side of ``q`` w.r.t. the bisector of the angle nxt-c-prv.

    Negative on the ``nxt`` side, positive on the ``prv`` side.  The sign of
    A/|d1| + B/|d2| is found without square roots by comparing squares.
    """
    d1 = (nxt[0] - c[0], nxt[1] - c[1])
    d2 = (prv[0] - c[0], prv[1] - c[1])
    w = (q[0] - c[0], q[1] - c[1])
    a = cross(d1[0], d1[1], w[0], w[1])
    b = cross(d2[0], d2[1], w[0], w[1])
    x = d1[0] * d1[0] + d1[1] * d1[1]
    y = d2[0] * d2[0] + d2[1] * d2[1]
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sa == 0 or sb == 0 or sa == sb:
        return sa or sb
    lhs, rhs = a * a * y, b * b * x
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


def separating_wedge_ok(pts, f: PseudoTriangle, which: int) -> bool:
    """Corner bisectors at both ends of side chain ``which`` separate it from the rest.

    The wedge is the intersection of the two closed half-planes on the chain's
    side of the bisector lines; no other face vertex may lie strictly inside it.
    """
    chains = side_chains(f)
    mine = chains[which]
    mine_set = set(mine)
    others = {v for t, ch in enumerate(chains) if t != which for v in ch} - mine_set
    m = len(f.cycle)
    tests = []
    for corner, sign in ((mine[0], -1), (mine[-1], 1)):
        pos = f.cycle.index(corner)
        tests.append((pts[corner], pts[f.cycle[(pos + 1) % m]], pts[f.cycle[pos - 1]], sign))
    for v in mine_set:
        for c, nxt, prv, sign in tests:
            if pts[v] != c and _bisector_side(c, nxt, prv, pts[v]) * sign < 0:
                return False
    for v in others:
        if all(_bisector_side(c, nxt, prv, pts[v]) * sign > 0 for c, nxt, prv, sign in tests):
            return False
    return True


def build_pointed_pt(p: Polygon, t: Triangulation, source: int) -> PointedPT:
    return pointed_pt(p, shortest_path_tree(p, t, source))


__all__ = ["ShortestPathTree", "PseudoTriangle", "PointedPT", "shortest_path_tree",
           "pointed_pt", "convex_tree_edges", "side_chains", "check_pointed", "chain_turn_consistent",
           "separating_wedge_ok", "build_pointed_pt"]
