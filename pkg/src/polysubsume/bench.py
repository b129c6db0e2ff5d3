"""Benchmark harness: subsumption time and per-query funnel time on P vs P'."""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass
from typing import IO, List, Optional, Sequence

from .generate import Dent, GenSpec, generate, sample_points
from .geodesic import GeodesicEngine
from .subsumption import subsume


@dataclass
class BenchRecord:
    n: int
    r: int
    wall_time_subsume: float
    wall_time_per_query_P: float
    wall_time_per_query_Pprime: float
    output_total: int

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def family_spec(n: int, reflex: int = 20, seed: int = 0) -> GenSpec:
    """Convex-dip dents of depth 5 totalling about ``reflex`` reflex vertices."""
    if reflex <= 0:
        return GenSpec(max(3, n), (), seed=seed)
    depth = 5
    dents = tuple(Dent("convex-dip", depth) for _ in range(max(1, reflex // depth)))
    rest = reflex - depth * len(dents)
    if rest > 0:
        dents += (Dent("convex-dip", rest),)
    hull = max(len(dents) + 3, n - reflex - 2 * len(dents))
    return GenSpec(hull, dents, seed=seed)


def _time_queries(engine: GeodesicEngine, pairs, repeat: int = 1) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for a, b in pairs:
            engine.path(a, b)
        best = min(best, time.perf_counter() - t0)
    return best / max(1, len(pairs))


def bench_one(n: int, reflex: int = 20, seed: int = 0, queries: int = 50,
              repeat: int = 3) -> BenchRecord:
    """Timings are the best of ``repeat`` runs to damp scheduler and GC noise."""
    q = generate(family_spec(n, reflex, seed))
    t_sub = float("inf")
    for _ in range(max(1, repeat)):
        t0 = time.perf_counter()
        res = subsume(q)
        t_sub = min(t_sub, time.perf_counter() - t0)
    e1 = GeodesicEngine(q.outer)
    e2 = GeodesicEngine(res.region.outer)
    rng = random.Random(seed)
    pts = sample_points(q.outer, rng, 2 * queries, e1.t.triangles)
    pairs = [(pts[2 * i], pts[2 * i + 1]) for i in range(queries)]
    return BenchRecord(q.n, res.report["r"], t_sub, _time_queries(e1, pairs, repeat),
                       _time_queries(e2, pairs, repeat), res.report["total_out"])


def bench(sizes: Sequence[int], reflex: int = 20, seed: int = 0, queries: int = 50,
          out: Optional[IO[str]] = None, repeat: int = 3) -> List[BenchRecord]:
    """One record per size, written as JSON lines to ``out`` when given."""
    records = []
    for n in sizes:
        rec = bench_one(n, reflex, seed, queries, repeat)
        records.append(rec)
        if out is not None:
            out.write(rec.to_json() + "\n")
            out.flush()
    return records
