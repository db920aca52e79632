"""Acceptance criteria 1-14, one check each with its runtime limit.

Run under pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly: ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from pathlib import Path

import networkx as nx
import pytest

from cutscope import betti as B
from cutscope import cycles as Y
from cutscope import verify as V
from cutscope.cuts import L_generators_by_pairs, L_ideal, cut_ideal, cycle_generators_formula, smaller_cycle_identity
from cutscope.decomposition import dim_formula_check, height, minimal_primes
from cutscope.freiman import classify_small, enumerate_graphs, freiman_report, listed_freiman_graphs, match_listed
from cutscope.graph import Graph, block_factors, clique_sum, complete, cycle, disjoint_union, path
from cutscope.monomial import embed, mu, product

RESULTS: list[tuple[int, bool, str, float, float]] = []

DOUBLE_TRIANGLE = "9x^4y^12 + 36x^3y^11 + 36x^2y^10 + 24x^2y^9 + 48xy^8 + 16y^6"


def _ledger(suite):
    return {r.claim: r for r in V.run(suite, V.Context())}


def _random_graphs(count, max_n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.4]
        if edges:
            out.append(Graph(n, tuple(edges)))
    return out


def c1():
    graphs = [cycle(n) for n in range(3, 11)] + [path(n) for n in range(2, 11)]
    graphs += [complete(n) for n in range(2, 6)] + _random_graphs(100, 8, 99)
    bad = [g for g in graphs if mu(cut_ideal(g)) != 2 ** (g.n - nx.number_connected_components(g.to_networkx()))]
    return not bad, f"{len(graphs)} graphs, {len(bad)} mismatches"


def c2():
    base = [complete(2), complete(3), path(3), cycle(4)]
    checked = bad = 0
    for g1, g2 in itertools.product(base, repeat=2):
        for pairing in ([], [(g1.n, 1)]):
            g = clique_sum(g1, g2, pairing)
            left = embed(cut_ideal(g1), list(range(1, g1.m + 1)), g.m)
            right = embed(cut_ideal(g2), list(range(g1.m + 1, g.m + 1)), g.m)
            checked += 1
            bad += product(left, right) != cut_ideal(g)
    return bad == 0, f"{checked} sums, {bad} mismatches"


def c3():
    tables = {p: B.betti(cut_ideal(cycle(3)), p).entries for p in (2, 3, 32003)}
    ok = all(t == {(0, 3): 4, (1, 5): 6, (2, 6): 3} for t in tables.values())
    rec = _ledger("cycle")["cycle.beta2-base"]
    ok &= rec.status == "adjudicated" and rec.details["oracle"] == [4, 6, 3]
    return ok, f"beta = {tables[2]}, ledger {rec.status}"


def c4():
    g = clique_sum(cycle(3), cycle(3), [(1, 1)])
    got = B.poincare(B.betti(cut_ideal(g)))
    tri = B.poincare(B.betti(cut_ideal(cycle(3))))
    ok = got == tri * tri == B.BivariatePoly.parse(DOUBLE_TRIANGLE)
    return ok, str(got)


def c5():
    forests = {1: [complete(2)], 2: [path(3), disjoint_union(complete(2), complete(2))],
               3: [path(4), Graph(4, ((1, 2), (1, 3), (1, 4))), disjoint_union(path(3), complete(2))]}
    unit = B.BivariatePoly.parse("2y + xy^2")
    ok = all(B.poincare(B.betti(cut_ideal(g))) == unit ** r for r, gs in forests.items() for g in gs)
    rec = _ledger("clique-sum")["clique-sum.whisker-shift"]
    ok &= rec.status == "adjudicated"
    return ok, f"r = 1, 2, 3 checked; x-shift ledger {rec.status}"


def c6():
    bad = [n for n in range(4, 11) if not smaller_cycle_identity(n)]
    return not bad, f"n = 4..10, failing {bad}"


def c7():
    bad = [n for n in range(3, 11) if cycle_generators_formula(n) != cut_ideal(cycle(n))]
    return not bad, f"n = 3..10, failing {bad}"


def c8():
    bad = []
    for n in range(4, 9):
        L = L_ideal(n)
        if set(L.gens) != set(L_generators_by_pairs(n)) or mu(L) != (n - 1) * 2 ** (n - 2):
            bad.append(n)
    return not bad, f"n = 4..8, failing {bad}"


def c9():
    bad = [n for n in range(4, 8) if not Y.quotient_colon_check(n)]
    return not bad, f"n = 4..7, failing {bad}"


def c10():
    rows = []
    ok = True
    for n in (4, 5):
        want = Y.lambda_totals(n)
        for p in (2, 32003):
            got = B.betti(L_ideal(n), p).totals()
            ok &= got == want and all(Y.lambda_betti(n, j) == got[j] for j in range(len(got)))
        rows.append(f"L{n} {want}")
    return ok, "; ".join(rows)


def c11():
    rows, ok = [], True
    for n in (4, 5):
        got = B.betti(cut_ideal(cycle(n))).totals()
        ok &= Y.betti_recursion(n) == got
        rows.append(f"C{n} {got}")
    return ok, "; ".join(rows)


def c12():
    ok = True
    for g in listed_freiman_graphs().values():
        r = freiman_report(g, max_power=4)
        ok &= r.defect == 0 and all(p.tight for p in r.powers) and len(r.powers) == 4
    defects = {name: freiman_report(g).defect for name, g in
               {"C4": cycle(4), "K4": complete(4), "P4": path(4), "C5": cycle(5)}.items()}
    ok &= all(d > 0 for d in defects.values())
    found = {g for g, _ in classify_small(5, 6)}
    expected = {g for g in enumerate_graphs(5, 6) if match_listed(g) is not None}
    ok &= found == expected
    return ok, f"defects {defects}; {len(found)} Freiman graphs, all listed copies"


def c13():
    connected = [g for g in enumerate_graphs(5, 10) if nx.is_connected(g.to_networkx())]
    heights = {height(minimal_primes(cut_ideal(g))) for g in connected}
    base = [complete(2), complete(3), path(3)]
    parts_ok = True
    for g1, g2 in itertools.product(base, repeat=2):
        for shared in (0, 1):
            off = g1.n - shared
            g2s = Graph(off + g2.n, tuple((u + off, v + off) for u, v in g2.edges))
            parts_ok &= dim_formula_check([g1, g2s])
    return heights == {2} and parts_ok, f"{len(connected)} connected graphs, heights {heights}"


def c14():
    cases = {"K2+K3": disjoint_union(complete(2), complete(3)),
             "K2#K1K3": clique_sum(complete(2), complete(3), [(2, 1)]),
             "K3+K3": disjoint_union(complete(3), complete(3))}
    ok, rows = True, []
    for name, g in cases.items():
        t = B.betti(cut_ideal(g))
        parts = []
        for comp in (c for c in nx.connected_components(g.to_networkx())):
            labels = [k for k, (u, _) in enumerate(g.edges, 1) if u in comp]
            parts.append(B.betti(cut_ideal(Graph(g.n, tuple(g.edges[k - 1] for k in labels)))))
        if len(parts) == 1:
            parts = [B.betti(cut_ideal(sub)) for sub, _ in block_factors(g)]
        pd_sum, reg_sum = sum(B.pd(x) for x in parts), sum(B.reg(x) for x in parts)
        ok &= B.pd(t) == pd_sum and B.reg(t) == reg_sum
        rows.append(f"{name} pd {B.pd(t)} reg {B.reg(t)}")
    return ok, "; ".join(rows)


CRITERIA = [
    (1, c1, 30), (2, c2, 10), (3, c3, 5), (4, c4, 300), (5, c5, 30), (6, c6, 30), (7, c7, 30),
    (8, c8, 60), (9, c9, 300), (10, c10, 900), (11, c11, 900), (12, c12, 600), (13, c13, 60), (14, c14, 300),
]


def evaluate(number, fn, limit):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    ok = bool(ok) and elapsed < limit
    RESULTS.append((number, ok, detail, elapsed, limit))
    return ok, detail, elapsed


def line(number, ok, detail, elapsed, limit):
    return f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  ({elapsed:.2f} s < {limit} s)  {detail}"


@pytest.mark.parametrize("number,fn,limit", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, fn, limit):
    ok, detail, elapsed = evaluate(number, fn, limit)
    assert ok, line(number, ok, detail, elapsed, limit)


if __name__ == "__main__":
    sys.path.insert(0, str(Path(__file__).parent))
    failures = 0
    for number, fn, limit in CRITERIA:
        ok, _, _ = evaluate(number, fn, limit)
        print(line(*RESULTS[-1]), flush=True)
        failures += not ok
    sys.exit(1 if failures else 0)
