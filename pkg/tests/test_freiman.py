from math import comb

import networkx as nx
import pytest

from cutscope.errors import BudgetExceededError
from cutscope.freiman import (
    classify_small,
    enumerate_graphs,
    freiman_report,
    listed_freiman_graphs,
    match_listed,
    power_bound,
)
from cutscope.graph import Graph, complete, cycle, path


def test_bound_at_k2():
    for ell in range(2, 8):
        for m in range(1, 40):
            assert power_bound(ell, m, 2) == ell * m - comb(ell, 2)
            assert power_bound(ell, m, 1) == m


@pytest.mark.parametrize("name", list(listed_freiman_graphs()))
def test_listed_graphs_are_freiman(name):
    g = listed_freiman_graphs()[name]
    r = freiman_report(g, max_power=3)
    assert r.defect == 0 and r.is_freiman
    assert all(p.tight for p in r.powers)
    assert r.ell == g.m + 1


@pytest.mark.parametrize("g,defect", [(cycle(4), 3), (complete(4), 1), (path(4), 1), (cycle(5), 25)])
def test_rejected_graphs(g, defect):
    r = freiman_report(g)
    assert r.defect == defect
    assert not r.is_freiman


def test_report_dict():
    d = freiman_report(complete(2)).to_dict()
    assert (d["mu"], d["mu2"], d["ell"], d["defect"], d["freiman"]) == (2, 3, 2, 0, True)
    assert d["ell_source"].startswith("cited")


def test_budget():
    with pytest.raises(BudgetExceededError) as info:
        freiman_report(cycle(5), generator_budget=10)
    assert info.value.partial.mu == 16
    with pytest.raises(ValueError):
        freiman_report(cycle(3), max_power=1)


def test_enumeration_counts():
    # labeled graphs without isolated vertices on exactly n vertices
    counts = {}
    for g in enumerate_graphs(4, 6):
        counts[g.n] = counts.get(g.n, 0) + 1
    assert counts == {2: 1, 3: 4, 4: 41}


def test_match_listed():
    assert match_listed(Graph(3, ((1, 3), (2, 3)))) == "P3"
    assert match_listed(Graph(5, ((4, 5), (1, 2), (2, 3), (1, 3)))) == "K2+K3"
    assert match_listed(cycle(4)) is None


def test_classification_small():
    found = classify_small(4, 4)
    assert found
    names = {match_listed(g) for g, v in found}
    assert None not in names
    assert names == {"K2", "K3", "P3", "K2+K2", "K2#K1K3"}
