# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""64-bit integer versions of the kernels in ``_pykernels``.

Callers guarantee |coordinate| <= 2**29 so every cross product fits in a
signed 64-bit integer.
"""

import numpy as np
cimport numpy as cnp

ctypedef long long i64

cdef inline int _sgn(i64 d) nogil:
    return (d > 0) - (d < 0)

cdef inline int _orient(i64 ax, i64 ay, i64 bx, i64 by, i64 cx, i64 cy) nogil:
    return _sgn((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


def reflex_flags(const i64[:] xs, const i64[:] ys):
    cdef Py_ssize_t n = xs.shape[0], i, a, c
    out = np.zeros(n, dtype=np.bool_)
    cdef cnp.npy_bool[:] o = out
    for i in range(n):
        a = i - 1 if i > 0 else n - 1
        c = i + 1 if i + 1 < n else 0
        o[i] = (xs[i] - xs[a]) * (ys[c] - ys[a]) - (ys[i] - ys[a]) * (xs[c] - xs[a]) < 0
    return out


def melkman(const i64[:] xs, const i64[:] ys):
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t cap = 2 * n + 2
    buf = np.empty(cap, dtype=np.int64)
    cdef i64[:] d = buf
    cdef Py_ssize_t bot = n, top = n + 3, i
    cdef i64 px, py
    if _orient(xs[0], ys[0], xs[1], ys[1], xs[2], ys[2]) > 0:
        d[bot] = 2; d[bot + 1] = 0; d[bot + 2] = 1; d[bot + 3] = 2
    else:
        d[bot] = 2; d[bot + 1] = 1; d[bot + 2] = 0; d[bot + 3] = 2
    with nogil:
        for i in range(3, n):
            px = xs[i]; py = ys[i]
            if (_orient(xs[d[top - 1]], ys[d[top - 1]], xs[d[top]], ys[d[top]], px, py) >= 0
                    and _orient(xs[d[bot]], ys[d[bot]], xs[d[bot + 1]], ys[d[bot + 1]], px, py) >= 0):
                continue
            while _orient(xs[d[top - 1]], ys[d[top - 1]], xs[d[top]], ys[d[top]], px, py) <= 0:
                top -= 1
            top += 1
            d[top] = i
            while _orient(xs[d[bot]], ys[d[bot]], xs[d[bot + 1]], ys[d[bot + 1]], px, py) <= 0:
                bot += 1
            bot -= 1
            d[bot] = i
    return [int(d[k]) for k in range(bot + 1, top + 1)]


cdef int _locate(const i64[:] xs, const i64[:] ys, i64 px, i64 py,
                 Py_ssize_t* vert, Py_ssize_t* edge) nogil:
    cdef Py_ssize_t n = xs.shape[0], i, j
    cdef bint inside = False
    cdef i64 ax, ay, bx, by, o
    vert[0] = -1
    edge[0] = -1
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        ax = xs[i]; ay = ys[i]; bx = xs[j]; by = ys[j]
        if ax == px and ay == py:
            vert[0] = i
            return 0
        o = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
        if (o == 0 and (ax if ax < bx else bx) <= px <= (bx if ax < bx else ax)
                and (ay if ay < by else by) <= py <= (by if ay < by else ay)):
            if not (bx == px and by == py):
                edge[0] = i
                return 0
        if (ay > py) != (by > py):
            if (by > ay and o > 0) or (by < ay and o < 0):
                inside = not inside
    return 1 if inside else -1


def locate_point(const i64[:] xs, const i64[:] ys, i64 px, i64 py):
    cdef Py_ssize_t v, e
    cdef int k = _locate(xs, ys, px, py, &v, &e)
    return k, v, e


cdef inline bint _in_cone(const i64[:] xs, const i64[:] ys, Py_ssize_t n, Py_ssize_t v,
                          i64 dx, i64 dy) nogil:
    cdef Py_ssize_t a = v - 1 if v > 0 else n - 1
    cdef Py_ssize_t b = v + 1 if v + 1 < n else 0
    cdef i64 ax = xs[a] - xs[v], ay = ys[a] - ys[v]
    cdef i64 bx = xs[b] - xs[v], by = ys[b] - ys[v]
    cdef i64 c1 = bx * dy - by * dx
    cdef i64 c2 = dx * ay - dy * ax
    if bx * ay - by * ax > 0:
        return c1 >= 0 and c2 >= 0
    return c1 >= 0 or c2 >= 0


def visible_from(const i64[:] xs, const i64[:] ys, i64 ux, i64 uy,
                 const i64[:] txs, const i64[:] tys):
    cdef Py_ssize_t n = xs.shape[0], m = txs.shape[0], k, i, j, uv, ue, ju
    cdef i64 tx, ty, dx, dy, ax, ay, bx, by, o1, o2, o3, o4, ex, ey, s, ll
    cdef bint ok
    out = np.zeros(m, dtype=np.bool_)
    cdef cnp.npy_bool[:] res = out
    cdef int kind = _locate(xs, ys, ux, uy, &uv, &ue)
    if kind == -1:
        return out
    with nogil:
        for k in range(m):
            tx = txs[k]; ty = tys[k]
            if tx == ux and ty == uy:
                res[k] = True
                continue
            dx = tx - ux; dy = ty - uy
            if uv >= 0:
                if not _in_cone(xs, ys, n, uv, dx, dy):
                    continue
            elif ue >= 0:
                ju = ue + 1 if ue + 1 < n else 0
                ex = xs[ju] - xs[ue]; ey = ys[ju] - ys[ue]
                if ex * dy - ey * dx < 0:
                    continue
            ok = True
            ll = dx * dx + dy * dy
            for i in range(n):
                j = i + 1 if i + 1 < n else 0
                ax = xs[i]; ay = ys[i]; bx = xs[j]; by = ys[j]
                o1 = dx * (ay - uy) - dy * (ax - ux)
                o2 = dx * (by - uy) - dy * (bx - ux)
                if (o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0):
                    ex = bx - ax; ey = by - ay
                    o3 = ex * (uy - ay) - ey * (ux - ax)
                    o4 = ex * (ty - ay) - ey * (tx - ax)
                    if (o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0):
                        ok = False
                        break
                if o1 == 0 and i != uv:
                    s = (ax - ux) * dx + (ay - uy) * dy
                    if 0 <= s <= ll:
                        if s > 0 and not _in_cone(xs, ys, n, i, -dx, -dy):
                            ok = False
                            break
                        if s < ll and not _in_cone(xs, ys, n, i, dx, dy):
                            ok = False
                            break
            res[k] = ok
    return out


def locate_triangle(const i64[:] xs, const i64[:] ys, const i64[:] tris, i64 px, i64 py):
    cdef Py_ssize_t t, nt = tris.shape[0] // 3
    cdef i64 a, b, c
    cdef Py_ssize_t found = -1
    with nogil:
        for t in range(nt):
            a = tris[3 * t]; b = tris[3 * t + 1]; c = tris[3 * t + 2]
            if ((xs[b] - xs[a]) * (py - ys[a]) - (ys[b] - ys[a]) * (px - xs[a]) >= 0
                    and (xs[c] - xs[b]) * (py - ys[b]) - (ys[c] - ys[b]) * (px - xs[b]) >= 0
                    and (xs[a] - xs[c]) * (py - ys[c]) - (ys[a] - ys[c]) * (px - xs[c]) >= 0):
                found = t
                break
    return found


cdef inline bint _between(i64 ax, i64 ay, i64 bx, i64 by, i64 px, i64 py) nogil:
    return ((ax if ax < bx else bx) <= px <= (bx if ax < bx else ax)
            and (ay if ay < by else by) <= py <= (by if ay < by else ay))


cdef bint _seg_touch(i64 ax, i64 ay, i64 bx, i64 by, i64 cx, i64 cy, i64 dx, i64 dy) nogil:
    cdef int o1 = _orient(ax, ay, bx, by, cx, cy)
    cdef int o2 = _orient(ax, ay, bx, by, dx, dy)
    cdef int o3 = _orient(cx, cy, dx, dy, ax, ay)
    cdef int o4 = _orient(cx, cy, dx, dy, bx, by)
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


def first_crossing(const i64[:] xs, const i64[:] ys, const i64[:] ea, const i64[:] eb):
    cdef Py_ssize_t m = ea.shape[0]
    lo_arr = np.minimum(np.asarray(xs)[np.asarray(ea)], np.asarray(xs)[np.asarray(eb)])
    hi_arr = np.maximum(np.asarray(xs)[np.asarray(ea)], np.asarray(xs)[np.asarray(eb)])
    order_arr = np.argsort(lo_arr, kind="stable").astype(np.int64)
    cdef const i64[:] order = order_arr
    cdef const i64[:] lo = lo_arr.astype(np.int64)
    cdef const i64[:] hi = hi_arr.astype(np.int64)
    act_arr = np.empty(m, dtype=np.int64)
    cdef i64[:] act = act_arr
    cdef Py_ssize_t na = 0, w, r, idx, k, q
    cdef i64 a, b, c, d, far, sh, other
    cdef Py_ssize_t ra = -1, rb = -1
    with nogil:
        for idx in range(m):
            k = order[idx]
            a = ea[k]; b = eb[k]
            w = 0
            for r in range(na):
                if hi[act[r]] >= lo[k]:
                    act[w] = act[r]
                    w += 1
            na = w
            for r in range(na):
                q = act[r]
                c = ea[q]; d = eb[q]
                if c == a or c == b or d == a or d == b:
                    if c == a or c == b:
                        far = d; sh = c
                    else:
                        far = c; sh = d
                    other = b if sh == a else a
                    if (_orient(xs[sh], ys[sh], xs[other], ys[other], xs[far], ys[far]) == 0
                            and (xs[other] - xs[sh]) * (xs[far] - xs[sh])
                            + (ys[other] - ys[sh]) * (ys[far] - ys[sh]) > 0):
                        ra = q; rb = k
                        break
                    continue
                if _seg_touch(xs[a], ys[a], xs[b], ys[b], xs[c], ys[c], xs[d], ys[d]):
                    ra = q; rb = k
                    break
            if ra >= 0:
                break
            act[na] = k
            na += 1
    if ra < 0:
        return None
    return (int(ra), int(rb)) if ra < rb else (int(rb), int(ra))
