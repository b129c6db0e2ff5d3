import random

import pytest

from polysubsume.generate import generate, random_spec, reflex_count
from polysubsume.polygon import make_region

from oracles import star_hole_in

P5 = [(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)]
SQUARE = [(0, 0), (4, 0), (4, 4), (0, 4)]
DENTED = [(0, 0), (10, 0), (10, 10), (8, 6), (6, 5), (4, 5), (2, 6), (0, 10)]


def build_corpus(count, n_min, n_max, seed):
    """Generated simple polygons with ``n_min <= n <= n_max`` and ``r >= 1``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        spec = random_spec(rng, n_max=rng.choice([m for m in (60, 200, 800, 2000) if m <= n_max] or [n_max]))
        q = generate(spec)
        r = reflex_count(q)
        if n_min <= q.n <= n_max and 1 <= r < q.n:
            out.append(q)
    return out


@pytest.fixture(scope="session")
def p5():
    return make_region(P5)


@pytest.fixture(scope="session")
def corpus():
    """200 generated simple polygons, mixed dent styles, 20 <= n <= 2000."""
    return build_corpus(200, 20, 2000, seed=2024)


@pytest.fixture(scope="session")
def holed_corpus():
    """Generated outer boundaries, each with one star-shaped hole."""
    return [star_hole_in(q.outer) for q in build_corpus(12, 20, 400, seed=77)]


@pytest.fixture(scope="session")
def small_corpus():
    return build_corpus(50, 20, 300, seed=4242)


ACCEPTANCE_LINES = []


def record_criterion(number, name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} ({detail})"
    ACCEPTANCE_LINES.append((number, line))
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
