import math
import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polysubsume.errors import CannotSplit, ChainNotHullHonest, NotSimplifiable
from polysubsume.exact import Point
from polysubsume.generate import Dent, GenSpec, generate, random_spec
from polysubsume.polygon import make_region, reflex_points, validate_simple
from polysubsume.subsumption import Chain, is_simplifiable, simplify_chain, split_at_vstar, subsume
from polysubsume.verify import contains_region, verify

from conftest import DENTED, P5, SQUARE

from oracles import star_hole_in


def chain(*pts):
    return Chain(tuple(Point(*p) for p in pts))


def test_is_simplifiable_examples():
    assert is_simplifiable(chain((0, 0), (1, 2), (3, 3)))
    assert is_simplifiable(chain((0, 0), (1, 2), (3, 3), (5, 2)))
    assert not is_simplifiable(chain((0, 4), (0, 0), (4, 0), (4, 4)))


def test_simplify_chain_examples():
    c = chain((0, 0), (1, 2), (3, 3))
    assert simplify_chain(c) == c
    assert simplify_chain(chain((0, 0), (1, 2), (3, 3), (5, 2))) == chain(
        (0, 0), (Fraction(9, 5), Fraction(18, 5)), (5, 2))
    assert simplify_chain(chain((0, 4), (0, 0), (4, 0), (6, 2))) == chain((0, 4), (0, -4), (6, 2))


def test_simplify_chain_rejects_parallel_ends():
    with pytest.raises(NotSimplifiable):
        simplify_chain(chain((0, 4), (0, 0), (4, 0), (4, 4)))


def test_chain_must_turn_one_way():
    with pytest.raises(ChainNotHullHonest):
        is_simplifiable(chain((0, 0), (1, 1), (2, 0), (3, 1)))
    with pytest.raises(ChainNotHullHonest):
        is_simplifiable(chain((0, 0), (1, 0), (2, 0), (3, 1)))


def test_split_at_vstar_square_arc():
    a, b = split_at_vstar(chain((0, 4), (0, 0), (4, 0), (4, 4)))
    assert a == chain((0, 4), (0, 0), (4, 0))
    assert b == chain((4, 0), (4, 4))


def test_split_at_vstar_12gon_arc():
    r = 10 ** 6
    arc = [(round(r * math.cos(math.radians(30 * k))), round(r * math.sin(math.radians(30 * k))))
           for k in range(9)]
    c = chain(*arc)
    assert not is_simplifiable(c)
    a, b = split_at_vstar(c)
    assert a.vertices[-1] == b.vertices[0]
    assert a.vertices + b.vertices[1:] == c.vertices
    assert is_simplifiable(a) and is_simplifiable(b)


def test_split_refuses_short_turn():
    with pytest.raises(CannotSplit):
        split_at_vstar(chain((0, 0), (1, 2), (3, 3), (5, 2)))


def test_subsume_p5_is_identity():
    res = subsume(make_region(P5))
    assert res.region == make_region(P5)
    assert res.report["pockets"] == 1
    assert res.report["support_edges"] == 1 == res.report["r"]
    assert res.replacements == []


def test_subsume_square_warns():
    res = subsume(make_region(SQUARE))
    assert res.report["warning_r_zero"] and res.region == make_region(SQUARE)


def test_subsume_dented_square_keeps_pocket():
    q = make_region(DENTED)
    res = subsume(q)
    assert not any(rep.origin == "pocket" for rep in res.replacements)
    assert Counter(reflex_points(res.region)) == Counter(reflex_points(q))


def test_generator_n100_r5_bound():
    q = generate(GenSpec(95, (Dent("convex-dip", 5),), seed=1))
    res = subsume(q)
    assert q.n == 100 and res.report["r"] == 5
    assert res.report["convex_out"] <= 32


def test_staircase_runs_collapse():
    q = generate(GenSpec(6, (Dent("staircase", 15),), seed=2))
    res = subsume(q)
    for rep in res.replacements:
        assert len(rep.replacement) == 3 and rep.original_interior_count >= 2
    assert res.report["total_out"] <= q.n


def test_convex_hole():
    hexagon = [(3, 2), (5, 2), (6, 4), (5, 6), (3, 6), (2, 4)]
    q = make_region([(0, 0), (8, 0), (8, 8), (0, 8)], [hexagon])
    res = subsume(q)
    assert res.report["r"] == 6 and res.report["holes"] == 1
    # a hole with c convex vertices contributes c - 3 diagonals
    assert res.report["support_edges"] == 3
    assert verify(q, pairs=0).ok


def test_nonconvex_hole_shrinks_inside_original():
    q = star_hole_in(generate(GenSpec(12, (Dent("convex-dip", 4),), seed=9)).outer)
    res = subsume(q)
    validate_simple(res.region)
    assert contains_region(res.region, q)
    assert Counter(reflex_points(res.region)) == Counter(reflex_points(q))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31))
def test_subsume_properties(seed):
    q = generate(random_spec(random.Random(seed), n_max=600))
    res = subsume(q)
    rep = res.report
    validate_simple(res.region)
    assert Counter(reflex_points(res.region)) == Counter(reflex_points(q))
    assert contains_region(res.region, q)
    assert rep["support_edges"] == rep["r"]
    assert rep["convex_out"] <= 6 * rep["r"] + 2
    assert rep["total_out"] <= 7 * rep["r"] + 2


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**31))
def test_subsume_is_idempotent_on_counts(seed):
    q = generate(random_spec(random.Random(seed), n_max=400))
    once = subsume(q).region
    twice = subsume(once).region
    assert Counter(reflex_points(twice)) == Counter(reflex_points(q))
    assert twice.n <= once.n
