"""Compiled vs pure-Python kernels, plus the end-to-end subsume/query bench.

Usage: python benchmarks/bench_kernels.py [--n 20000] [--repeat 3]
"""

import argparse
import random
import time

import numpy as np

from polysubsume import _pykernels, kernels
from polysubsume.bench import bench, family_spec
from polysubsume.generate import generate, sample_points
from polysubsume.triangulation import triangulate


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_table(n, repeat):
    q = generate(family_spec(n, 20, seed=1))
    p = q.outer
    xs = [v[0] for v in p.vertices]
    ys = [v[1] for v in p.vertices]
    t = triangulate(p)
    flat = list(t.flat.tolist())
    pts = sample_points(p, random.Random(0), 50, t.triangles)
    cases = {
        "reflex_flags": (lambda: _pykernels.reflex_flags(xs, ys),
                         lambda cx, cy: kernels._ckernels.reflex_flags(cx, cy)),
        "melkman": (lambda: _pykernels.melkman(xs, ys),
                    lambda cx, cy: kernels._ckernels.melkman(cx, cy)),
        "locate_point x50": (lambda: [_pykernels.locate_point(xs, ys, a[0], a[1]) for a in pts],
                             lambda cx, cy: [kernels._ckernels.locate_point(cx, cy, a[0], a[1])
                                             for a in pts if type(a[0]) is int and type(a[1]) is int]),
        "locate_triangle x50": (lambda: [_pykernels.locate_triangle(xs, ys, flat, a[0], a[1]) for a in pts],
                                lambda cx, cy: [kernels._ckernels.locate_triangle(cx, cy, t.flat, a[0], a[1])
                                                for a in pts if type(a[0]) is int and type(a[1]) is int]),
    }
    print(f"kernels on n={p.n} (backend available: {kernels.backend()})")
    print(f"{'kernel':<22}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    cx = np.asarray(xs, dtype=np.int64)
    cy = np.asarray(ys, dtype=np.int64)
    for name, (py, cy_fn) in cases.items():
        tp = best_of(py, repeat)
        if kernels.COMPILED:
            tc = best_of(lambda: cy_fn(cx, cy), repeat)
            print(f"{name:<22}{tp:>12.5f}{tc:>12.5f}{tp / max(tc, 1e-9):>9.1f}x")
        else:
            print(f"{name:<22}{tp:>12.5f}{'n/a':>12}{'':>10}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sizes", type=int, nargs="+", default=[10000, 20000, 40000])
    args = ap.parse_args()
    kernel_table(args.n, args.repeat)
    print()
    print("end to end (JSON lines)")
    for rec in bench(args.sizes, reflex=20, seed=0, queries=50):
        print(rec.to_json())


if __name__ == "__main__":
    main()
