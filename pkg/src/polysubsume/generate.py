"""Random simple polygons with a controllable number of reflex vertices.

A strictly convex lattice polygon is built from primitive edge vectors with
distinct directions (sorted by angle, summing to zero), then dents are carved
into distinct hull edges.  ``convex-dip`` dents add a concave run of reflex
vertices; ``staircase`` dents alternate reflex apexes with short convex runs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import List, Sequence, Tuple

from .errors import GenerationFailed, GeometryError
from .exact import Point
from .polygon import PolygonWithHoles, canonicalize, classify_vertices, validate_simple

DENT_STYLES = ("convex-dip", "staircase")


@dataclass(frozen=True)
class Dent:
    style: str
    depth_vertices: int

    def __post_init__(self):
        if self.style not in DENT_STYLES:
            raise ValueError(f"unknown dent style {self.style!r}")
        if self.depth_vertices < 1:
            raise ValueError("depth_vertices must be >= 1")


@dataclass(frozen=True)
class GenSpec:
    hull_vertices: int
    dents: Tuple[Dent, ...] = field(default_factory=tuple)
    seed: int = 0
    scale: int = 1000

    def __post_init__(self):
        object.__setattr__(self, "dents", tuple(
            d if isinstance(d, Dent) else Dent(*d) for d in self.dents))
        if self.hull_vertices < 3:
            raise ValueError("hull_vertices must be >= 3")
        if len(self.dents) > self.hull_vertices:
            raise ValueError("more dents than hull edges")


def _direction(v):
    g = math.gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def _angle_key(a, b):
    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    ha, hb = half(a), half(b)
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _primitive_pool(count: int) -> List[Tuple[int, int]]:
    """At least ``count`` primitive vectors (x >= 1, y >= 0) in order of length."""
    r = 2
    while True:
        pool = [(x, y) for x in range(1, r + 1) for y in range(0, r + 1)
                if math.gcd(x, y) == 1 and x * x + y * y <= r * r]
        if len(pool) >= count:
            pool.sort(key=lambda v: (v[0] * v[0] + v[1] * v[1], v))
            return pool
        r = int(r * 1.5) + 1


def convex_edge_vectors(h: int, rng: random.Random) -> List[Tuple[int, int]]:
    """``h`` nonzero integer vectors with distinct directions summing to zero."""
    extra_pair = h % 4 in (1, 2)
    extra_triple = h % 4 in (1, 3)
    q = (h - 2 * extra_pair - 3 * extra_triple) // 4
    pool = _primitive_pool(max(2 * q, q + 8))
    chosen = rng.sample(pool, q)
    vecs = []
    for x, y in chosen:
        vecs.extend([(x, y), (-y, x), (-x, -y), (y, -x)])
    used = {_direction(v) for v in vecs}

    def fresh(v):
        return v != (0, 0) and _direction(v) not in used

    lim = max(4, int(math.isqrt(len(pool))) + 3)
    if extra_pair:
        while True:
            w = (rng.randint(-lim, lim), rng.randint(-lim, lim))
            if fresh(w) and fresh((-w[0], -w[1])):
                vecs.extend([w, (-w[0], -w[1])])
                used.update({_direction(w), _direction((-w[0], -w[1]))})
                break
    if extra_triple:
        while True:
            a = (rng.randint(-lim, lim), rng.randint(-lim, lim))
            b = (rng.randint(-lim, lim), rng.randint(-lim, lim))
            c = (-a[0] - b[0], -a[1] - b[1])
            dirs = {_direction(v) for v in (a, b, c) if v != (0, 0)}
            if fresh(a) and fresh(b) and fresh(c) and len(dirs) == 3:
                vecs.extend([a, b, c])
                used.update(dirs)
                break
    vecs.sort(key=cmp_to_key(_angle_key))
    return vecs


def _dent_points(a, v, s, dent: Dent, rng: random.Random):
    """Lattice points of one dent on the hull edge a -> a + s*v (exclusive ends)."""
    nx, ny = -v[1], v[0]          # inward normal for a ccw polygon

    def at(t, y):
        return (a[0] + t * v[0] + y * nx, a[1] + t * v[1] + y * ny)

    d = dent.depth_vertices
    if dent.style == "convex-dip":
        offs = [(i, i * (d + 1 - i)) for i in range(1, d + 1)]
        span = d + 1
    else:
        apex = 6
        offs = []
        x = 1
        offs.append((x, apex))
        remaining = d - 1
        while remaining >= 2:
            run = min(rng.randint(1, 3), remaining - 1)
            ys = {1: [1], 2: [1, 1], 3: [2, 1, 2]}[run]
            for y in ys:
                x += 1
                offs.append((x, y))
            x += 1
            offs.append((x, apex))
            remaining -= run + 1
        span = x + 1
    q = max(1, s // span)
    start = (s - span * q) // 2
    pts = []
    if start > 0:
        pts.append(at(start, 0))
    pts.extend(at(start + t * q, y) for t, y in offs)
    if start + span * q < s:
        pts.append(at(start + span * q, 0))
    return pts


def _required_multiplier(dents: Sequence[Dent]) -> int:
    need = 1
    for d in dents:
        k = d.depth_vertices + 1
        need = max(need, (k * k) // 2 + k if d.style == "convex-dip" else 8 * k)
    return need


def generate(spec: GenSpec, max_retries: int = 20) -> PolygonWithHoles:
    """Deterministic simple polygon for ``spec`` (same seed, same polygon)."""
    rng = random.Random(spec.seed)
    for _ in range(max_retries):
        vecs = convex_edge_vectors(spec.hull_vertices, rng)
        pts = [(0, 0)]
        for v in vecs[:-1]:
            pts.append((pts[-1][0] + v[0], pts[-1][1] + v[1]))
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        extent = max(max(xs) - min(xs), max(ys) - min(ys), 1)
        s = max(_required_multiplier(spec.dents), -(-spec.scale // extent))
        dent_edges = set(rng.sample(range(len(vecs)), len(spec.dents)))
        dents = list(spec.dents)
        rng.shuffle(dents)
        out: List[Tuple[int, int]] = []
        k = 0
        for i, v in enumerate(vecs):
            a = (pts[i][0] * s, pts[i][1] * s)
            out.append(a)
            if i in dent_edges:
                out.extend(_dent_points(a, _direction(v), s * math.gcd(*v), dents[k], rng))
                k += 1
        try:
            poly = canonicalize([Point(x, y) for x, y in out])
            region = PolygonWithHoles(poly, ())
            validate_simple(region)
        except GeometryError:
            continue
        return region
    raise GenerationFailed(f"no simple polygon after {max_retries} attempts")


def reflex_count(region: PolygonWithHoles) -> int:
    return sum(sum(classify_vertices(r)) for r in region.rings())


def random_spec(rng: random.Random, n_max: int = 2000, hull_min: int = 4) -> GenSpec:
    """A mixed-style spec whose vertex count stays below roughly ``n_max``."""
    hull = rng.randint(hull_min, max(hull_min, n_max // 2))
    budget = max(1, n_max - hull - 10)
    ndent = rng.randint(1, min(6, hull))
    dents = []
    for _ in range(ndent):
        depth = rng.randint(1, max(1, min(120, budget // ndent)))
        dents.append(Dent(rng.choice(DENT_STYLES), depth))
    return GenSpec(hull, tuple(dents), seed=rng.getrandbits(63), scale=1000)


def sample_points(p, rng: random.Random, k: int, triangles=None) -> List[Point]:
    """``k`` integer points inside or on a polygon, deterministic for a given rng.

    Half are uniform in the bounding box; the rest are rounded centroids of
    random triangles, which reaches narrow pockets that box sampling misses.
    """
    from .polygon import Location, contains_point
    ring = p.outer if isinstance(p, PolygonWithHoles) else p
    xs = [v[0] for v in ring]
    ys = [v[1] for v in ring]
    x0, x1 = math.floor(min(xs)), math.ceil(max(xs))
    y0, y1 = math.floor(min(ys)), math.ceil(max(ys))
    out: List[Point] = []
    tries = 0
    while len(out) < k:
        tries += 1
        if tries > 200 * k + 1000:
            raise GenerationFailed("could not sample interior points")
        if triangles and rng.random() < 0.5:
            a, b, c = (ring[i] for i in triangles[rng.randrange(len(triangles))])
            q = Point(round((a[0] + b[0] + c[0]) / 3), round((a[1] + b[1] + c[1]) / 3))
        else:
            q = Point(rng.randint(x0, x1), rng.randint(y0, y1))
        if contains_point(p, q) != Location.EXTERIOR:
            out.append(q)
    return out
