import random

from hypothesis import given, settings, strategies as st

from polysubsume.generate import Dent, GenSpec, generate, random_spec
from polysubsume.polygon import make_region
from polysubsume.triangulation import dual_path, triangulate

from conftest import P5, SQUARE
from oracles import shoelace2


def test_square():
    t = triangulate(make_region(SQUARE).outer)
    assert len(t.triangles) == 2 and len(t.diagonals) == 1


def test_p5_dual_is_path():
    t = triangulate(make_region(P5).outer)
    assert len(t.triangles) == 3 and len(t.diagonals) == 2
    degrees = sorted(len(a) for a in t.adjacency)
    assert degrees == [1, 1, 2]
    ears = [i for i, a in enumerate(t.adjacency) if len(a) == 1]
    assert len(dual_path(t, ears[0], ears[1])) == 3
    assert dual_path(t, 0, 0) == [0]


def test_area_sums_exactly_n500():
    q = generate(GenSpec(200, (Dent("staircase", 40), Dent("convex-dip", 60)), seed=5))
    p = q.outer
    t = triangulate(p)
    assert len(t.triangles) == p.n - 2
    assert sum(shoelace2([p[i] for i in tr]) for tr in t.triangles) == shoelace2(p.vertices)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31))
def test_triangulation_counts_and_area(seed):
    p = generate(random_spec(random.Random(seed), n_max=400)).outer
    t = triangulate(p)
    assert len(t.triangles) == p.n - 2
    assert len(t.diagonals) == p.n - 3
    assert all(shoelace2([p[i] for i in tr]) > 0 for tr in t.triangles)
    assert sum(shoelace2([p[i] for i in tr]) for tr in t.triangles) == shoelace2(p.vertices)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**31), st.data())
def test_dual_path_is_connected(seed, data):
    p = generate(random_spec(random.Random(seed), n_max=200)).outer
    t = triangulate(p)
    a = data.draw(st.integers(0, len(t.triangles) - 1))
    b = data.draw(st.integers(0, len(t.triangles) - 1))
    path = dual_path(t, a, b)
    assert path[0] == a and path[-1] == b
    assert len(set(path)) == len(path)
    assert all(y in t.adjacency[x] for x, y in zip(path, path[1:]))
