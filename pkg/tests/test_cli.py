import json
import subprocess
import sys

import pytest

from polysubsume import jsonio
from polysubsume.cli import main
from polysubsume.polygon import make_region

from conftest import P5


@pytest.fixture
def p5_file(tmp_path):
    f = tmp_path / "p5.json"
    jsonio.save(make_region(P5), f)
    return str(f)


def test_gen_and_stats(tmp_path, capsys):
    out = tmp_path / "g.json"
    assert main(["gen", "--hull", "12", "--dent", "convex-dip:4", "--seed", "3", "-o", str(out)]) == 0
    capsys.readouterr()
    assert main(["stats", str(out)]) == 0
    stats = json.loads(capsys.readouterr().out)
    assert stats["r"] == 4 and stats["holes"] == 0 and stats["pockets"] == 1


def test_subsume_writes_outputs(tmp_path, p5_file, capsys):
    out, rep, svg = tmp_path / "o.json", tmp_path / "r.json", tmp_path / "o.svg"
    assert main(["subsume", p5_file, "-o", str(out), "--report", str(rep), "--svg", str(svg)]) == 0
    assert jsonio.load(out) == make_region(P5)
    assert json.loads(rep.read_text())["support_edges"] == 1
    assert svg.read_text().startswith("<svg")
    assert "support_edges=1" in capsys.readouterr().out


def test_verify_passes(p5_file, capsys):
    assert main(["verify", p5_file, "--pairs", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_query(p5_file, capsys):
    assert main(["query", p5_file, "--from", "1,2", "--to", "3,2", "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "(1,2) (2,1) (3,2)" in out and "oracle agrees" in out


def test_query_outside_exits_1(p5_file, capsys):
    assert main(["query", p5_file, "--from", "2,3", "--to", "1,1"]) == 1
    assert "outside" in capsys.readouterr().err


def test_invalid_polygon_exits_1(tmp_path, capsys):
    f = tmp_path / "bowtie.json"
    f.write_text('{"outer": [[0,0],[2,2],[2,0],[0,2]]}')
    assert main(["stats", str(f)]) == 1
    assert main(["subsume", str(f), "-o", str(tmp_path / "x.json")]) == 1


def test_missing_file_exits_1(tmp_path):
    assert main(["stats", str(tmp_path / "nope.json")]) == 1


def test_float_coordinates_exit_1(tmp_path):
    f = tmp_path / "f.json"
    f.write_text('{"outer": [[0,0],[2.5,0],[0,2]]}')
    assert main(["stats", str(f)]) == 1


def test_console_entry_point(tmp_path):
    out = tmp_path / "b.jsonl"
    r = subprocess.run([sys.executable, "-m", "polysubsume.cli", "bench", "--sizes", "200",
                        "--reflex", "5", "--queries", "3", "-o", str(out)],
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    assert json.loads(out.read_text())["r"] == 5
