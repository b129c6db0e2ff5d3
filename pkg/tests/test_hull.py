import random

from hypothesis import given, settings, strategies as st

from polysubsume.exact import Point
from polysubsume.generate import generate, random_spec
from polysubsume.hull import convex_hull, extract_pockets
from polysubsume.polygon import classify_vertices, make_region

from conftest import DENTED, P5, SQUARE
from oracles import monotone_chain_hull


def test_square_hull_and_chain():
    p = make_region(SQUARE).outer
    assert convex_hull(p).corners == (0, 1, 2, 3)
    pockets, chains = extract_pockets(p, convex_hull(p))
    assert pockets == [] and len(chains) == 1 and len(chains[0].indices) == 4


def test_p5_pocket():
    p = make_region(P5).outer
    h = convex_hull(p)
    assert [p[i] for i in h.corners] == [Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)]
    pockets, chains = extract_pockets(p, h)
    assert len(pockets) == 1
    pk = pockets[0]
    assert (p[pk.lid[0]], p[pk.lid[1]]) == (Point(4, 4), Point(0, 4))
    assert [p[i] for i in pk.chain] == [Point(4, 4), Point(2, 1), Point(0, 4)]
    assert [[p[i] for i in c.indices] for c in chains] == [
        [Point(0, 4), Point(0, 0), Point(4, 0), Point(4, 4)]]


def test_dented_square_pocket_convex_count():
    p = make_region(DENTED).outer
    pockets, _ = extract_pockets(p, convex_hull(p))
    assert len(pockets) == 1
    poly = pockets[0].polygon(p)
    assert len(poly) - sum(classify_vertices(poly)) == 6


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31))
def test_hull_matches_monotone_chain(seed):
    q = generate(random_spec(random.Random(seed), n_max=300))
    p = q.outer
    got = [p[i] for i in convex_hull(p).corners]
    want = monotone_chain_hull(p.vertices)
    k = got.index(want[0])
    assert got[k:] + got[:k] == want


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31))
def test_pockets_and_chains_partition_boundary(seed):
    q = generate(random_spec(random.Random(seed), n_max=300))
    p = q.outer
    pockets, chains = extract_pockets(p, convex_hull(p))
    edges = set()
    for pk in pockets:
        ch = pk.chain
        edges.update(zip(ch, ch[1:]))
    for c in chains:
        edges.update(zip(c.indices, c.indices[1:]))
    assert edges == {(i, (i + 1) % p.n) for i in range(p.n)}
    assert sum(len(pk.chain) - 1 for pk in pockets) + sum(len(c.indices) - 1 for c in chains) == p.n
