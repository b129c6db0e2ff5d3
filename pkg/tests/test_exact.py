from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polysubsume.exact import (Point, Ray, format_rational, orient, ray_intersection, rational,
                               segments_properly_intersect, signed_area2)

coord = st.integers(-50, 50)
point = st.builds(Point, coord, coord)


@pytest.mark.parametrize("a,b,c,want", [
    ((0, 0), (1, 0), (0, 1), 1),
    ((0, 0), (1, 1), (2, 2), 0),
    ((0, 0), (1, 2), (3, 3), -1),
])
def test_orient_examples(a, b, c, want):
    assert orient(Point(*a), Point(*b), Point(*c)) == want


def test_ray_intersection_examples():
    got = ray_intersection(Ray(Point(0, 0), Point(1, 2)), Ray(Point(5, 2), Point(3, 3)))
    assert got == Point(Fraction(9, 5), Fraction(18, 5))
    assert ray_intersection(Ray(Point(0, 4), Point(0, 0)), Ray(Point(4, 4), Point(4, 0))) is None
    assert ray_intersection(Ray(Point(0, 0), Point(1, 0)), Ray(Point(5, 0), Point(6, 0))) is None


def test_ray_intersection_behind_origin():
    assert ray_intersection(Ray(Point(0, 0), Point(1, 0)), Ray(Point(-1, -1), Point(-1, 1))) is None


@pytest.mark.parametrize("a1,a2,b1,b2,want", [
    ((0, 0), (2, 2), (0, 2), (2, 0), True),
    ((0, 0), (1, 0), (1, 0), (2, 1), False),
    ((0, 0), (2, 0), (1, 0), (3, 0), True),
])
def test_segments_properly_intersect_examples(a1, a2, b1, b2, want):
    assert segments_properly_intersect(*(Point(*p) for p in (a1, a2, b1, b2))) is want


def test_rational_normalises_integers():
    assert type(rational(Fraction(6, 3))) is int
    assert rational("3/6") == Fraction(1, 2)
    assert format_rational(Fraction(-9, 5)) == "-9/5"
    assert format_rational(4) == "4"


def test_rational_rejects_floats():
    with pytest.raises(TypeError):
        rational(0.5)


@given(point, point, point)
def test_orient_antisymmetric(a, b, c):
    assert orient(a, b, c) == -orient(b, a, c) == orient(b, c, a)


@given(point, point, point, point)
def test_ray_intersection_lies_on_both_rays(a, b, c, d):
    if a == b or c == d:
        return
    m = ray_intersection(Ray(a, b), Ray(c, d))
    if m is not None:
        assert orient(a, b, m) == 0 and orient(c, d, m) == 0
        assert (m[0] - a[0]) * (b[0] - a[0]) + (m[1] - a[1]) * (b[1] - a[1]) >= 0
        assert (m[0] - c[0]) * (d[0] - c[0]) + (m[1] - c[1]) * (d[1] - c[1]) >= 0


def test_signed_area2_square():
    assert signed_area2([Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)]) == 32
