"""Triangulation of simple polygons by monotone decomposition, and its dual tree."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import InvariantError
from .exact import orient
from .polygon import Polygon

START, END, SPLIT, MERGE, REGULAR = range(5)


def _above(p, q) -> bool:
    return p[1] > q[1] or (p[1] == q[1] and p[0] < q[0])


def _x_at(a, b, y):
    if a[1] == b[1]:
        return max(a[0], b[0])
    return a[0] + Fraction((y - a[1]) * (b[0] - a[0]), b[1] - a[1])


def monotone_diagonals(pts: Sequence) -> List[Tuple[int, int]]:
    """Diagonals splitting a ccw simple polygon into y-monotone pieces."""
    n = len(pts)
    order = sorted(range(n), key=lambda i: (-pts[i][1], pts[i][0]))
    kind = [REGULAR] * n
    for i in range(n):
        u, v, w = pts[i - 1], pts[i], pts[(i + 1) % n]
        a_u, a_w = _above(u, v), _above(w, v)
        convex = orient(u, v, w) > 0
        if not a_u and not a_w:
            kind[i] = START if convex else SPLIT
        elif a_u and a_w:
            kind[i] = END if convex else MERGE
    helper: Dict[int, int] = {}     # edge i = (i, i+1) -> helper vertex
    status: List[int] = []
    diags: List[Tuple[int, int]] = []

    def left_edge(v: int) -> int:
        p = pts[v]
        best, best_x = -1, None
        for e in status:
            a, b = pts[e], pts[(e + 1) % n]
            if orient(a, b, p) > 0:
                x = _x_at(a, b, p[1])
                if best_x is None or x > best_x:
                    best, best_x = e, x
        if best < 0:
            raise InvariantError("sweep status has no edge left of a vertex")
        return best

    def fix_up(e: int, v: int):
        h = helper[e]
        if kind[h] == MERGE:
            diags.append((v, h))

    for v in order:
        prev = (v - 1) % n
        k = kind[v]
        if k == START:
            status.append(v)
            helper[v] = v
        elif k == END:
            fix_up(prev, v)
            status.remove(prev)
        elif k == SPLIT:
            e = left_edge(v)
            diags.append((v, helper[e]))
            helper[e] = v
            status.append(v)
            helper[v] = v
        elif k == MERGE:
            fix_up(prev, v)
            status.remove(prev)
            e = left_edge(v)
            fix_up(e, v)
            helper[e] = v
        else:
            if _above(pts[prev], pts[v]):
                # left chain: interior lies to the right
                fix_up(prev, v)
                status.remove(prev)
                status.append(v)
                helper[v] = v
            else:
                e = left_edge(v)
                fix_up(e, v)
                helper[e] = v
    return diags


def _angle_cmp(ref):
    rx, ry = ref

    def half(d):
        c = rx * d[1] - ry * d[0]
        if c > 0 or (c == 0 and rx * d[0] + ry * d[1] > 0):
            return 0
        return 1

    def cmp(d1, d2):
        h1, h2 = half(d1), half(d2)
        if h1 != h2:
            return h1 - h2
        c = d1[0] * d2[1] - d1[1] * d2[0]
        return -1 if c > 0 else (1 if c < 0 else 0)

    return cmp


def rotation_system(pts: Sequence, diagonals: Iterable[Tuple[int, int]]) -> List[List[int]]:
    """Neighbours of every vertex in ccw order, from next vertex to previous."""
    n = len(pts)
    extra: List[List[int]] = [[] for _ in range(n)]
    for a, b in diagonals:
        extra[a].append(b)
        extra[b].append(a)
    rot = []
    for v in range(n):
        nxt, prv = (v + 1) % n, (v - 1) % n
        if not extra[v]:
            rot.append([nxt, prv])
            continue
        px, py = pts[v]
        ref = (pts[nxt][0] - px, pts[nxt][1] - py)
        cmp = _angle_cmp(ref)
        mids = sorted(extra[v], key=cmp_to_key(
            lambda a, b: cmp((pts[a][0] - px, pts[a][1] - py), (pts[b][0] - px, pts[b][1] - py))))
        rot.append([nxt] + mids + [prv])
    return rot


def polygon_faces(pts: Sequence, diagonals: Iterable[Tuple[int, int]]) -> List[List[int]]:
    """Interior faces of a ccw polygon cut by non-crossing diagonals (ccw cycles)."""
    n = len(pts)
    rot = rotation_system(pts, diagonals)
    pos = [{u: k for k, u in enumerate(r)} for r in rot]
    seen = set()
    faces = []
    starts = [(i, (i + 1) % n) for i in range(n)]
    for v in range(n):
        for u in rot[v][1:-1]:
            starts.append((v, u))
    for e in starts:
        if e in seen:
            continue
        face = []
        u, w = e
        while (u, w) not in seen:
            seen.add((u, w))
            face.append(u)
            k = pos[w][u]
            x = rot[w][k - 1]
            u, w = w, x
        faces.append(face)
    return faces


def _triangulate_monotone(pts: Sequence, cyc: List[int]) -> List[Tuple[int, int]]:
    m = len(cyc)
    if m <= 3:
        return []
    top = min(range(m), key=lambda k: (-pts[cyc[k]][1], pts[cyc[k]][0]))
    bot = min(range(m), key=lambda k: (pts[cyc[k]][1], -pts[cyc[k]][0]))
    left = set()
    k = top
    while k != bot:
        left.add(cyc[k])
        k = (k + 1) % m
    left.add(cyc[bot])
    order = sorted(cyc, key=lambda i: (-pts[i][1], pts[i][0]))
    diags = []
    stack = [order[0], order[1]]
    for j in range(2, m - 1):
        u = order[j]
        if (u in left) != (stack[-1] in left):
            while len(stack) > 1:
                diags.append((u, stack.pop()))
            stack.pop()
            stack.extend((order[j - 1], u))
        else:
            last = stack.pop()
            while stack:
                s = stack[-1]
                if u in left:
                    ok = orient(pts[s], pts[last], pts[u]) > 0
                else:
                    ok = orient(pts[u], pts[last], pts[s]) > 0
                if not ok:
                    break
                diags.append((u, s))
                last = stack.pop()
            stack.extend((last, u))
    u = order[-1]
    for s in stack[1:-1]:
        diags.append((u, s))
    return diags


@dataclass
class Triangulation:
    """Triangles as ccw index triples with the dual tree over shared diagonals."""

    points: Tuple
    triangles: List[Tuple[int, int, int]]
    diagonals: List[Tuple[int, int]]
    edge_tri: Dict[Tuple[int, int], int] = field(repr=False)
    adjacency: List[List[int]] = field(repr=False)
    parent: List[int] = field(repr=False)
    depth: List[int] = field(repr=False)
    _flat: object = field(default=None, repr=False)
    _pre: object = field(default=None, repr=False)

    @property
    def flat(self):
        if self._flat is None:
            self._flat = np.asarray([i for t in self.triangles for i in t], dtype=np.int64)
        return self._flat

    def shared_edge(self, ta: int, tb: int) -> Tuple[int, int]:
        """Directed edge (u, v) of ``tb`` (ccw in tb) shared with ``ta``."""
        a = self.triangles[ta]
        b = self.triangles[tb]
        for k in range(3):
            u, v = b[k], b[(k + 1) % 3]
            if self.edge_tri.get((v, u)) == ta:
                return u, v
        raise InvariantError(f"triangles {ta} and {tb} are not adjacent ({a}, {b})")

    def preorder(self) -> List[int]:
        """Depth-first preorder index of every triangle (children in ccw order)."""
        if self._pre is None:
            pre = [0] * len(self.triangles)
            counter = 0
            stack = [(0, -1)]
            while stack:
                t, via = stack.pop()
                pre[t] = counter
                counter += 1
                tri = self.triangles[t]
                kids = []
                start = 0
                if via >= 0:
                    for k in range(3):
                        u, v = tri[k], tri[(k + 1) % 3]
                        if self.edge_tri.get((v, u)) == via:
                            start = k + 1
                for s in range(3):
                    k = (start + s) % 3
                    u, v = tri[k], tri[(k + 1) % 3]
                    c = self.edge_tri.get((v, u))
                    if c is not None and c != via:
                        kids.append(c)
                for c in reversed(kids):
                    stack.append((c, t))
            self._pre = pre
        return self._pre


def triangulate(p) -> Triangulation:
    """Triangulate a canonical ccw simple polygon, O(n log n) expected."""
    pts = p.vertices if isinstance(p, Polygon) else tuple(p)
    n = len(pts)
    mono = monotone_diagonals(pts)
    diags = list(mono)
    if mono:
        pieces = polygon_faces(pts, mono)
    else:
        pieces = [list(range(n))]
    for cyc in pieces:
        diags.extend(_triangulate_monotone(pts, cyc))
    faces = polygon_faces(pts, diags) if diags else [list(range(n))]
    triangles = []
    for f in faces:
        if len(f) != 3:
            raise InvariantError(f"non-triangular face of size {len(f)}")
        triangles.append(tuple(f))
    return build_triangulation(pts, triangles, diags)


def build_triangulation(pts, triangles, diags) -> Triangulation:
    edge_tri = {}
    for t, (a, b, c) in enumerate(triangles):
        edge_tri[(a, b)] = t
        edge_tri[(b, c)] = t
        edge_tri[(c, a)] = t
    adjacency: List[List[int]] = [[] for _ in triangles]
    for (u, v), t in edge_tri.items():
        s = edge_tri.get((v, u))
        if s is not None:
            adjacency[t].append(s)
    parent = [-1] * len(triangles)
    depth = [0] * len(triangles)
    if triangles:
        seen = [False] * len(triangles)
        seen[0] = True
        q = deque([0])
        while q:
            t = q.popleft()
            for s in adjacency[t]:
                if not seen[s]:
                    seen[s] = True
                    parent[s] = t
                    depth[s] = depth[t] + 1
                    q.append(s)
    return Triangulation(tuple(pts), triangles, [tuple(d) for d in diags], edge_tri,
                         adjacency, parent, depth)


def dual_path(t: Triangulation, tri_a: int, tri_b: int) -> List[int]:
    """Unique path of triangles between two triangles of the dual tree."""
    a, b = tri_a, tri_b
    up, down = [], []
    while t.depth[a] > t.depth[b]:
        up.append(a)
        a = t.parent[a]
    while t.depth[b] > t.depth[a]:
        down.append(b)
        b = t.parent[b]
    while a != b:
        up.append(a)
        down.append(b)
        a, b = t.parent[a], t.parent[b]
    return up + [a] + down[::-1]


def dual_distance(t: Triangulation, tri_a: int, tri_b: int) -> int:
    return len(dual_path(t, tri_a, tri_b)) - 1


def locate(t: Triangulation, coords, q) -> int:
    """Index of a triangle containing ``q`` (closed), or -1."""
    return coords.locate_triangle(t.flat, q)
