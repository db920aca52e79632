import itertools
import random
import sys

import pytest

from cutscope.graph import Graph


def brute_rank_mod_p(rows, p):
    """Rank over F_p as log_p of the size of the row space (tiny matrices only)."""
    rows = [tuple(x % p for x in r) for r in rows]
    if not rows:
        return 0
    width = len(rows[0])
    span = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        span.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(width)))
    rank = 0
    while p ** rank < len(span):
        rank += 1
    return rank


@pytest.fixture
def rng():
    return random.Random(1234)


def random_graph(rng, max_n=7):
    while True:
        n = rng.randint(2, max_n)
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        edges = [e for e in pairs if rng.random() < 0.45]
        if edges:
            rng.shuffle(edges)
            return Graph(n, tuple(edges))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for row in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line(*row))
