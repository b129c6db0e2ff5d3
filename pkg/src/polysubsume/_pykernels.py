"""Reference implementations of the hot kernels.

These operate on parallel coordinate sequences of exact numbers (ints or
Fractions) and are always available.  :mod:`polysubsume._ckernels` mirrors
the same functions over 64-bit integers.
"""

from collections import deque

INTERIOR, BOUNDARY, EXTERIOR = 1, 0, -1


def _orient(ax, ay, bx, by, cx, cy):
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def reflex_flags(xs, ys):
    """Per-vertex flag: True where the directed cycle turns right."""
    n = len(xs)
    out = [False] * n
    for i in range(n):
        ax, ay = xs[i - 1], ys[i - 1]
        bx, by = xs[i], ys[i]
        j = i + 1 if i + 1 < n else 0
        cx, cy = xs[j], ys[j]
        out[i] = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) < 0
    return out


def melkman(xs, ys):
    """Strict convex hull of a simple counterclockwise cycle (vertex indices).

    Vertices lying on hull edges without being corners are not reported.
    """
    n = len(xs)
    if _orient(xs[0], ys[0], xs[1], ys[1], xs[2], ys[2]) > 0:
        d = deque((2, 0, 1, 2))
    else:
        d = deque((2, 1, 0, 2))
    for i in range(3, n):
        px, py = xs[i], ys[i]
        t1, t0 = d[-2], d[-1]
        b0, b1 = d[0], d[1]
        if (_orient(xs[t1], ys[t1], xs[t0], ys[t0], px, py) >= 0
                and _orient(xs[b0], ys[b0], xs[b1], ys[b1], px, py) >= 0):
            continue
        while _orient(xs[d[-2]], ys[d[-2]], xs[d[-1]], ys[d[-1]], px, py) <= 0:
            d.pop()
        d.append(i)
        while _orient(xs[d[0]], ys[d[0]], xs[d[1]], ys[d[1]], px, py) <= 0:
            d.popleft()
        d.appendleft(i)
    d.popleft()
    return list(d)


def locate_point(xs, ys, px, py):
    """Classify a point against a simple counterclockwise cycle.

    Returns ``(kind, vertex, edge)``: kind is INTERIOR/BOUNDARY/EXTERIOR,
    ``vertex`` the index of a coincident vertex or -1, ``edge`` the index of
    the edge (i, i+1) whose relative interior holds the point or -1.
    """
    n = len(xs)
    inside = False
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        ax, ay, bx, by = xs[i], ys[i], xs[j], ys[j]
        if ax == px and ay == py:
            return BOUNDARY, i, -1
        o = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
        if o == 0 and min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by):
            if not (bx == px and by == py):
                return BOUNDARY, -1, i
        if (ay > py) != (by > py):
            # upward edge counts if the point is left of it, downward if right
            if (by > ay and o > 0) or (by < ay and o < 0):
                inside = not inside
    return (INTERIOR if inside else EXTERIOR), -1, -1


def _in_cone(xs, ys, n, v, dx, dy):
    """Direction (dx, dy) from vertex v points into the closed interior angle."""
    a = v - 1
    b = v + 1 if v + 1 < n else 0
    vx, vy = xs[v], ys[v]
    ax, ay = xs[a] - vx, ys[a] - vy
    bx, by = xs[b] - vx, ys[b] - vy
    convex = bx * ay - by * ax > 0
    c1 = bx * dy - by * dx
    c2 = dx * ay - dy * ax
    if convex:
        return c1 >= 0 and c2 >= 0
    return c1 >= 0 or c2 >= 0


def visible_from(xs, ys, ux, uy, txs, tys):
    """For each target t: does the closed segment u-t lie in the closed polygon?"""
    n = len(xs)
    m = len(txs)
    kind, uv, ue = locate_point(xs, ys, ux, uy)
    if kind == EXTERIOR:
        return [False] * m
    out = [False] * m
    for k in range(m):
        tx, ty = txs[k], tys[k]
        if tx == ux and ty == uy:
            out[k] = True
            continue
        dx, dy = tx - ux, ty - uy
        # start direction at u
        if uv >= 0:
            if not _in_cone(xs, ys, n, uv, dx, dy):
                continue
        elif ue >= 0:
            j = ue + 1 if ue + 1 < n else 0
            ex, ey = xs[j] - xs[ue], ys[j] - ys[ue]
            if ex * dy - ey * dx < 0:
                continue
        ok = True
        for i in range(n):
            j = i + 1 if i + 1 < n else 0
            ax, ay, bx, by = xs[i], ys[i], xs[j], ys[j]
            o1 = dx * (ay - uy) - dy * (ax - ux)
            o2 = dx * (by - uy) - dy * (bx - ux)
            if (o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0):
                ex, ey = bx - ax, by - ay
                o3 = ex * (uy - ay) - ey * (ux - ax)
                o4 = ex * (ty - ay) - ey * (tx - ax)
                if (o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0):
                    ok = False
                    break
            if o1 == 0 and i != uv:
                # vertex i on the line; check whether it sits on the segment
                s = (ax - ux) * dx + (ay - uy) * dy
                if 0 <= s <= dx * dx + dy * dy:
                    if s > 0 and not _in_cone(xs, ys, n, i, -dx, -dy):
                        ok = False
                        break
                    if s < dx * dx + dy * dy and not _in_cone(xs, ys, n, i, dx, dy):
                        ok = False
                        break
        out[k] = ok
    return out


def locate_triangle(xs, ys, tris, px, py):
    """Index of the first triangle (flat index triples) containing the point."""
    for t in range(len(tris) // 3):
        a, b, c = tris[3 * t], tris[3 * t + 1], tris[3 * t + 2]
        ax, ay, bx, by, cx, cy = xs[a], ys[a], xs[b], ys[b], xs[c], ys[c]
        if ((bx - ax) * (py - ay) - (by - ay) * (px - ax) >= 0
                and (cx - bx) * (py - by) - (cy - by) * (px - bx) >= 0
                and (ax - cx) * (py - cy) - (ay - cy) * (px - cx) >= 0):
            return t
    return -1


def _seg_touch(ax, ay, bx, by, cx, cy, dx, dy):
    """Closed segments ab and cd share at least one point."""
    o1 = _orient(ax, ay, bx, by, cx, cy)
    o2 = _orient(ax, ay, bx, by, dx, dy)
    o3 = _orient(cx, cy, dx, dy, ax, ay)
    o4 = _orient(cx, cy, dx, dy, bx, by)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _between(ax, ay, bx, by, cx, cy):
        return True
    if o2 == 0 and _between(ax, ay, bx, by, dx, dy):
        return True
    if o3 == 0 and _between(cx, cy, dx, dy, ax, ay):
        return True
    if o4 == 0 and _between(cx, cy, dx, dy, bx, by):
        return True
    return False


def _between(ax, ay, bx, by, px, py):
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def first_crossing(xs, ys, ea, eb):
    """First pair of edges that meet illegally, or None.

    Edges are index pairs (ea[k], eb[k]).  Edges sharing a vertex index may
    only meet in that vertex; all other pairs must be disjoint.
    """
    m = len(ea)
    order = sorted(range(m), key=lambda k: min(xs[ea[k]], xs[eb[k]]))
    active = []
    for k in order:
        a, b = ea[k], eb[k]
        ax, ay, bx, by = xs[a], ys[a], xs[b], ys[b]
        lo = min(ax, bx)
        active = [q for q in active if max(xs[ea[q]], xs[eb[q]]) >= lo]
        for q in active:
            c, d = ea[q], eb[q]
            cx, cy, dx, dy = xs[c], ys[c], xs[d], ys[d]
            if c in (a, b) or d in (a, b):
                # adjacent: fail only if the far endpoint folds back onto the other edge
                if c == a or c == b:
                    far, sh = d, c
                else:
                    far, sh = c, d
                other = b if sh == a else a
                fx, fy, ox, oy, sx, sy = xs[far], ys[far], xs[other], ys[other], xs[sh], ys[sh]
                if (_orient(sx, sy, ox, oy, fx, fy) == 0
                        and (ox - sx) * (fx - sx) + (oy - sy) * (fy - sy) > 0):
                    return (q, k) if q < k else (k, q)
                continue
            if _seg_touch(ax, ay, bx, by, cx, cy, dx, dy):
                return (q, k) if q < k else (k, q)
        active.append(k)
    return None
