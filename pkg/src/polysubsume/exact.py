"""Exact rational geometry primitives.

Coordinates are Python ``int`` or :class:`fractions.Fraction`.  Every value
that passes through :func:`rational` is normalised so that integral values are
plain ints, which keeps the common integer-coordinate case fast while staying
exact for the rational vertices created by chain simplification.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional, Union

Rational = Union[int, Fraction]


def rational(value) -> Rational:
    """Coerce ``value`` to an exact rational; integral values become ``int``.

    Accepts ints, Fractions, and strings such as ``"3"``, ``"-7/2"`` or
    ``"0.25"``.  Floats are rejected because they silently carry rounding
    error into the combinatorial pipeline.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        f = Fraction(value.strip())
        return f.numerator if f.denominator == 1 else f
    if isinstance(value, float):
        raise TypeError("float coordinates are not exact; pass a string or Fraction")
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(value: Rational) -> str:
    """Serialise as ``"p"`` or ``"p/q"`` in lowest terms with ``q > 0``."""
    if isinstance(value, int):
        return str(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Point(NamedTuple):
    x: Rational
    y: Rational

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(rational(x), rational(y))

    def __str__(self) -> str:
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


class Ray(NamedTuple):
    origin: Point
    through: Point


def cross(ax, ay, bx, by):
    return ax * by - ay * bx


def orient(a, b, c) -> int:
    """Sign of (b - a) x (c - a): +1 left turn, 0 collinear, -1 right turn."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def on_segment(a, b, p) -> bool:
    """True if ``p`` lies on the closed segment ``ab``."""
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_properly_intersect(a1, a2, b1, b2) -> bool:
    """True iff the closed segments share a point that is not a shared endpoint.

    Collinear overlaps of positive length count as intersections; touching in
    a single common endpoint does not.
    """
    o1 = orient(a1, a2, b1)
    o2 = orient(a1, a2, b2)
    o3 = orient(b1, b2, a1)
    o4 = orient(b1, b2, a2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == o2 == o3 == o4 == 0:
        # collinear: compare along the dominant axis
        axis = 0 if a1[0] != a2[0] else 1
        lo_a, hi_a = sorted((a1[axis], a2[axis]))
        lo_b, hi_b = sorted((b1[axis], b2[axis]))
        lo, hi = max(lo_a, lo_b), min(hi_a, hi_b)
        return lo < hi
    # touching: an endpoint of one segment on the other, not a shared endpoint
    for p, s, t in ((b1, a1, a2), (b2, a1, a2), (a1, b1, b2), (a2, b1, b2)):
        if p != s and p != t and on_segment(s, t, p):
            return True
    return False


def ray_intersection(r1: Ray, r2: Ray) -> Optional[Point]:
    """Unique common point of two rays, or None.

    Parallel rays, including collinear overlapping ones, give None.
    """
    (px, py), (qx, qy) = r1.origin, r1.through
    (sx, sy), (tx, ty) = r2.origin, r2.through
    dx, dy = qx - px, qy - py
    ex, ey = tx - sx, ty - sy
    den = dx * ey - dy * ex
    if den == 0:
        return None
    wx, wy = sx - px, sy - py
    # p + t d = s + u e
    t_num = wx * ey - wy * ex
    u_num = wx * dy - wy * dx
    if den < 0:
        den, t_num, u_num = -den, -t_num, -u_num
    if t_num < 0 or u_num < 0:
        return None
    t = Fraction(t_num, den)
    return Point(rational(px + t * dx), rational(py + t * dy))


def signed_area2(points) -> Rational:
    """Twice the signed area (shoelace), exact."""
    s = 0
    n = len(points)
    for i in range(n):
        x0, y0 = points[i - 1]
        x1, y1 = points[i]
        s += x0 * y1 - x1 * y0
    return s
