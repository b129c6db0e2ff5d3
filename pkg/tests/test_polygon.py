import pytest

from polysubsume.errors import DegeneratePolygon, NotSimple
from polysubsume.exact import Point
from polysubsume.polygon import (Location, Polygon, PolygonWithHoles, canonicalize, classify_vertices,
                                 contains_point, make_region, reflex_points, validate_simple)

from conftest import P5, SQUARE


def pts(seq):
    return [Point(*p) for p in seq]


def test_canonicalize_drops_collinear():
    assert canonicalize(pts([(0, 0), (2, 0), (4, 0), (4, 4), (0, 4)])).vertices == tuple(pts(SQUARE))


def test_canonicalize_fixes_orientation():
    p = canonicalize(pts([(0, 0), (0, 4), (4, 4), (4, 0)]))
    assert p.area2() > 0
    assert set(p.vertices) == set(pts(SQUARE))


def test_canonicalize_rejects_collinear_input():
    with pytest.raises(DegeneratePolygon):
        canonicalize(pts([(0, 0), (1, 1), (2, 2)]))


def test_validate_simple_examples():
    validate_simple(make_region(SQUARE))
    validate_simple(make_region(P5))
    bowtie = PolygonWithHoles(Polygon(pts([(0, 0), (2, 2), (2, 0), (0, 2)])), ())
    with pytest.raises(NotSimple):
        validate_simple(bowtie)


def test_validate_simple_hole_touching_outer():
    q = make_region(SQUARE, [[(0, 0), (1, 2), (2, 1)]])
    with pytest.raises(NotSimple):
        validate_simple(q)


def test_classify_vertices():
    assert sum(classify_vertices(make_region(SQUARE).outer)) == 0
    assert reflex_points(make_region(P5)) == [Point(2, 1)]


def test_convex_hole_vertices_are_reflex():
    hexagon = [(3, 2), (5, 2), (6, 4), (5, 6), (3, 6), (2, 4)]
    q = make_region([(0, 0), (8, 0), (8, 8), (0, 8)], [hexagon])
    validate_simple(q)
    assert sorted(reflex_points(q)) == sorted(pts(hexagon))


@pytest.mark.parametrize("q,want", [
    ((1, 2), Location.INTERIOR),
    ((2, 2), Location.EXTERIOR),
    ((2, 1), Location.BOUNDARY),
    ((3, 0), Location.BOUNDARY),
    ((5, 5), Location.EXTERIOR),
])
def test_contains_point_p5(q, want):
    assert contains_point(make_region(P5), Point(*q)) == want


def test_contains_point_hole_is_exterior():
    q = make_region([(0, 0), (8, 0), (8, 8), (0, 8)], [[(2, 2), (6, 2), (6, 6), (2, 6)]])
    assert contains_point(q, Point(4, 4)) == Location.EXTERIOR
    assert contains_point(q, Point(1, 1)) == Location.INTERIOR
    assert contains_point(q, Point(2, 4)) == Location.BOUNDARY
