import json
import os
import random
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polysubsume import _pykernels, kernels
from polysubsume.exact import Point
from polysubsume.generate import generate, random_spec, sample_points
from polysubsume.polygon import Location, contains_point, make_region
from polysubsume.triangulation import triangulate

needs_cython = pytest.mark.skipif(not kernels.COMPILED, reason="compiled kernels not built")


def arrays(p):
    xs = [v[0] for v in p.vertices]
    ys = [v[1] for v in p.vertices]
    return xs, ys, np.asarray(xs, dtype=np.int64), np.asarray(ys, dtype=np.int64)


def test_backend_name():
    assert kernels.backend() in ("cython", "python")


def test_rational_coordinates_use_fallback():
    q = make_region([(0, 0), (Fraction(1, 2), 3), (0, 2)])
    assert not q.outer.coords().compiled
    assert contains_point(q, Point(0, 1)) == Location.BOUNDARY


def test_large_coordinates_use_fallback():
    big = 1 << 40
    q = make_region([(0, 0), (big, 0), (big, big), (0, big)])
    assert not q.outer.coords().compiled
    assert contains_point(q, Point(big // 2, big // 2)) == Location.INTERIOR


@needs_cython
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31))
def test_kernels_agree(seed):
    p = generate(random_spec(random.Random(seed), n_max=300)).outer
    xs, ys, cx, cy = arrays(p)
    c = kernels._ckernels
    assert c.reflex_flags(cx, cy).tolist() == _pykernels.reflex_flags(xs, ys)
    assert sorted(c.melkman(cx, cy)) == sorted(_pykernels.melkman(xs, ys))
    t = triangulate(p)
    rng = random.Random(seed)
    pts = sample_points(p, rng, 10, t.triangles) + [p[0], p[len(p) // 2]]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pts += [Point(rng.randint(x0 - 5, x1 + 5), rng.randint(y0 - 5, y1 + 5)) for _ in range(10)]
    flat = t.flat
    for q in pts:
        assert c.locate_point(cx, cy, q[0], q[1]) == _pykernels.locate_point(xs, ys, q[0], q[1])
        assert c.locate_triangle(cx, cy, flat, q[0], q[1]) == \
            _pykernels.locate_triangle(xs, ys, flat.tolist(), q[0], q[1])
    tx = [v[0] for v in p.vertices]
    ty = [v[1] for v in p.vertices]
    for u in pts[:6]:
        got = c.visible_from(cx, cy, u[0], u[1], np.asarray(tx, dtype=np.int64),
                             np.asarray(ty, dtype=np.int64)).tolist()
        assert [bool(g) for g in got] == [bool(w) for w in _pykernels.visible_from(xs, ys, u[0], u[1], tx, ty)]


@needs_cython
@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.integers(-20, 20), st.integers(-20, 20)), min_size=4, max_size=12, unique=True))
def test_first_crossing_agrees(raw):
    n = len(raw)
    xs = [p[0] for p in raw]
    ys = [p[1] for p in raw]
    ea = list(range(n))
    eb = [(i + 1) % n for i in range(n)]
    py = _pykernels.first_crossing(xs, ys, ea, eb)
    cy = kernels._ckernels.first_crossing(np.asarray(xs, dtype=np.int64), np.asarray(ys, dtype=np.int64),
                                          np.asarray(ea, dtype=np.int64), np.asarray(eb, dtype=np.int64))
    assert (py is None) == (cy is None)


PURE_SCRIPT = """
import json, sys
from polysubsume import GenSpec, Dent, generate, subsume, backend
from polysubsume.jsonio import dumps
q = generate(GenSpec(30, (Dent("staircase", 8), Dent("convex-dip", 4)), seed=11))
print(json.dumps({"backend": backend(), "out": dumps(subsume(q).region)}))
"""


def test_pure_fallback_gives_same_result():
    outs = []
    for pure in ("1", ""):
        env = dict(os.environ, POLYSUBSUME_PURE=pure)
        r = subprocess.run([sys.executable, "-c", PURE_SCRIPT], env=env, capture_output=True,
                           text=True, check=True)
        outs.append(json.loads(r.stdout))
    assert outs[0]["backend"] == "python"
    assert outs[0]["out"] == outs[1]["out"]
