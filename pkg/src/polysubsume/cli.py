"""Command line interface.

Exit codes: 0 success, 1 invalid input (validation or I/O), 2 invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import jsonio
from .bench import bench
from .errors import GenerationFailed, GeometryError, InvariantError
from .exact import Point, format_rational, rational
from .generate import Dent, GenSpec, generate, reflex_count
from .geodesic import GeodesicEngine, visibility_oracle_path
from .hull import convex_hull, extract_pockets
from .kernels import backend
from .polygon import classify_vertices, validate_simple
from .subsumption import subsume
from .svg import render_svg
from .verify import verify


def _point(text: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected x,y but got {text!r}")
    try:
        return Point(rational(parts[0]), rational(parts[1]))
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e))


def _dent(text: str) -> Dent:
    style, _, depth = text.partition(":")
    try:
        return Dent(style, int(depth))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad dent {text!r}: {e}")


def _load(path: str):
    q = jsonio.load(path)
    validate_simple(q)
    return q


def cmd_gen(args) -> int:
    spec = GenSpec(args.hull, tuple(args.dent), seed=args.seed, scale=args.scale)
    q = generate(spec)
    if args.output:
        jsonio.save(q, args.output)
    else:
        print(jsonio.dumps(q))
    print(f"n={q.n} r={reflex_count(q)}", file=sys.stderr)
    return 0


def cmd_subsume(args) -> int:
    q = _load(args.input)
    res = subsume(q, validate=False)
    jsonio.save(res.region, args.output)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(res.report, fh, indent=2)
            fh.write("\n")
    if args.svg:
        render_svg(q, res.region, args.svg)
    rep = res.report
    print(" ".join(f"{k}={v}" for k, v in rep.items()))
    return 0


def cmd_verify(args) -> int:
    q = _load(args.input)
    report = verify(q, pairs=args.pairs, seed=args.seed)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 2


def cmd_query(args) -> int:
    q = _load(args.input)
    if q.holes:
        raise GeometryError("geodesic queries support simple polygons only")
    eng = GeodesicEngine(q.outer)
    path = eng.path(args.src, args.dst)
    print(" ".join(f"({format_rational(v[0])},{format_rational(v[1])})" for v in path.vertices))
    print(f"length {path.length:.12g}")
    if args.oracle:
        ref = visibility_oracle_path(q.outer, args.src, args.dst)
        same = ref.vertices == path.vertices
        print(f"oracle {'agrees' if same else 'DISAGREES'}")
        if not same:
            return 2
    return 0


def cmd_stats(args) -> int:
    q = _load(args.input)
    flags = [classify_vertices(r) for r in q.rings()]
    r = sum(sum(f) for f in flags)
    pockets, _ = extract_pockets(q.outer, convex_hull(q.outer))
    print(json.dumps({"n": q.n, "r": r, "convex": q.n - r, "holes": len(q.holes),
                      "pockets": len(pockets), "backend": backend()}))
    return 0


def cmd_bench(args) -> int:
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        bench(args.sizes, reflex=args.reflex, seed=args.seed, queries=args.queries, out=out,
              repeat=args.repeat)
    finally:
        if args.output:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polysubsume",
                                 description="Subsuming polygons and geodesic queries.")
    sub = ap.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("gen", help="generate a random polygon")
    g.add_argument("--hull", type=int, default=16, help="convex hull vertex count")
    g.add_argument("--dent", type=_dent, action="append", default=[],
                   help="dent as STYLE:DEPTH (convex-dip or staircase); repeatable")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--scale", type=int, default=1000)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("subsume", help="compute the subsuming polygon")
    s.add_argument("input")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--report")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_subsume)

    v = sub.add_parser("verify", help="run the invariant suite on one instance")
    v.add_argument("input")
    v.add_argument("--pairs", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    qp = sub.add_parser("query", help="geodesic path between two points")
    qp.add_argument("input")
    qp.add_argument("--from", dest="src", type=_point, required=True)
    qp.add_argument("--to", dest="dst", type=_point, required=True)
    qp.add_argument("--oracle", action="store_true", help="cross-check with the visibility graph")
    qp.set_defaults(func=cmd_query)

    st = sub.add_parser("stats", help="vertex and reflex counts")
    st.add_argument("input")
    st.set_defaults(func=cmd_stats)

    b = sub.add_parser("bench", help="timing records as JSON lines")
    b.add_argument("--sizes", type=int, nargs="+", default=[10000, 20000, 40000])
    b.add_argument("--reflex", type=int, default=20)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--queries", type=int, default=50)
    b.add_argument("--repeat", type=int, default=3, help="report the best of this many runs")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantError as e:
        print(f"invariant breach: {e}", file=sys.stderr)
        return 2
    except (GeometryError, GenerationFailed, ValueError, TypeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
