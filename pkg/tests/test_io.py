import io
import json
import random
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polysubsume import jsonio
from polysubsume.bench import BenchRecord, bench, family_spec
from polysubsume.generate import Dent, GenSpec, generate, random_spec, reflex_count
from polysubsume.polygon import make_region, validate_simple
from polysubsume.subsumption import subsume
from polysubsume.svg import render_svg

from conftest import P5, SQUARE


def test_json_round_trip_rationals():
    q = make_region([(0, 0), (Fraction(7, 2), 0), (3, Fraction(-1, 3) + 4)], [])
    text = jsonio.dumps(q)
    assert '"7/2"' in text
    assert jsonio.loads(text) == q


def test_json_accepts_ints_rejects_floats():
    assert jsonio.loads('{"outer": [[0,0],[4,0],[4,4],[0,4]]}') == make_region(SQUARE)
    with pytest.raises(TypeError):
        jsonio.loads('{"outer": [[0,0],[4.5,0],[4,4]]}')
    with pytest.raises(ValueError):
        jsonio.loads('{"holes": []}')


def test_json_file_round_trip(tmp_path):
    q = generate(GenSpec(10, (Dent("staircase", 4),), seed=3))
    f = tmp_path / "q.json"
    jsonio.save(q, f)
    assert jsonio.load(f) == q


def paths(svg_text):
    root = ET.fromstring(svg_text)
    return [e for e in root.iter() if e.tag.endswith("path")]


def test_svg_p5_alone():
    ps = paths(render_svg(make_region(P5)))
    assert len(ps) == 1 and "stroke-dasharray" in ps[0].attrib
    assert ps[0].attrib["d"].count("M") == 1


def test_svg_p5_with_subsumed():
    q = make_region(P5)
    ps = paths(render_svg(q, subsume(q).region))
    assert len(ps) == 2
    solid = [p for p in ps if "stroke-dasharray" not in p.attrib]
    assert len(solid) == 1 and solid[0].attrib["fill-rule"] == "evenodd"


def test_svg_hole_even_odd(tmp_path):
    q = make_region([(0, 0), (8, 0), (8, 8), (0, 8)], [[(2, 2), (6, 2), (6, 6), (2, 6)]])
    out = tmp_path / "h.svg"
    text = render_svg(q, path=str(out))
    assert out.read_text() == text
    ps = paths(text)
    assert ps[0].attrib["d"].count("M") == 2 and ps[0].attrib["fill-rule"] == "evenodd"


def test_generate_convex_quad():
    q = generate(GenSpec(4, (), seed=1))
    assert q.n == 4 and reflex_count(q) == 0


def test_generate_convex_dip_depth3():
    q = generate(GenSpec(4, (Dent("convex-dip", 3),), seed=1))
    assert reflex_count(q) == 3


def test_generate_deterministic():
    spec = GenSpec(25, (Dent("staircase", 6), Dent("convex-dip", 5)), seed=99)
    assert jsonio.dumps(generate(spec)) == jsonio.dumps(generate(spec))
    other = GenSpec(25, (Dent("staircase", 6), Dent("convex-dip", 5)), seed=100)
    assert jsonio.dumps(generate(spec)) != jsonio.dumps(generate(other))


def test_genspec_validation():
    with pytest.raises(ValueError):
        GenSpec(2)
    with pytest.raises(ValueError):
        Dent("zigzag", 3)
    with pytest.raises(ValueError):
        GenSpec(3, (Dent("staircase", 1),) * 4)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31), st.sampled_from(["convex-dip", "staircase"]), st.integers(1, 30))
def test_generated_polygons_are_simple(seed, style, depth):
    q = generate(GenSpec(random.Random(seed).randint(3, 40), (Dent(style, depth),), seed=seed))
    validate_simple(q)
    if style == "convex-dip":
        assert reflex_count(q) == depth


def test_family_spec_reflex_budget():
    q = generate(family_spec(2000, 20, seed=0))
    assert reflex_count(q) == 20 and abs(q.n - 2000) <= 20


def test_bench_records():
    buf = io.StringIO()
    recs = bench([300, 600], reflex=10, seed=1, queries=5, out=buf, repeat=1)
    assert len(recs) == 2 and all(isinstance(r, BenchRecord) for r in recs)
    lines = buf.getvalue().splitlines()
    assert len(lines) == 2
    assert set(json.loads(lines[0])) == {"n", "r", "wall_time_subsume", "wall_time_per_query_P",
                                         "wall_time_per_query_Pprime", "output_total"}


def test_bench_r_zero():
    rec = bench([50], reflex=0, seed=0, queries=3, repeat=1)[0]
    assert rec.r == 0 and rec.output_total == rec.n
