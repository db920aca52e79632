"""Freiman tests for cut ideals by counting generators of powers.

An equigenerated monomial ideal with analytic spread l satisfies
mu(I^k) >= C(l+k-2, k-1) mu(I) - (k-1) C(l+k-2, k) for all k, and is called
Freiman when the k = 2 bound is attained (then every k attains it). For cut
ideals the analytic spread is |E(G)| + 1; we take that closed formula as given
rather than computing a fiber ring.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from math import comb

import networkx as nx

from .cuts import cut_ideal
from .errors import BudgetExceededError
from .graph import Graph, clique_sum, complete, disjoint_union, path
from .monomial import mu, product

DEFAULT_GENERATOR_BUDGET = 200_000


def analytic_spread(g: Graph) -> int:
    return g.m + 1


def power_bound(ell: int, mu1: int, k: int) -> int:
    return comb(ell + k - 2, k - 1) * mu1 - (k - 1) * comb(ell + k - 2, k)


@dataclass
class PowerRecord:
    k: int
    mu: int
    bound: int

    @property
    def tight(self) -> bool:
        return self.mu == self.bound


@dataclass
class FreimanReport:
    graph: dict
    m: int
    ell: int
    mu: int
    mu2: int | None = None
    bound: int | None = None
    powers: list[PowerRecord] = field(default_factory=list)
    ell_source: str = "cited: |E(G)| + 1"
    partial: bool = False

    @property
    def defect(self) -> int | None:
        return None if self.mu2 is None else self.mu2 - self.bound

    @property
    def is_freiman(self) -> bool | None:
        return None if self.defect is None else self.defect == 0

    def to_dict(self) -> dict:
        out = asdict(self)
        out["powers"] = [dict(asdict(p), tight=p.tight) for p in self.powers]
        out["defect"] = self.defect
        out["freiman"] = self.is_freiman
        return out


def freiman_report(g: Graph, max_power: int = 2, generator_budget: int = DEFAULT_GENERATOR_BUDGET) -> FreimanReport:
    if max_power < 2:
        raise ValueError(f"max_power must be at least 2, got {max_power}")
    I = cut_ideal(g)
    ell = analytic_spread(g)
    report = FreimanReport(graph=g.to_dict(), m=g.m, ell=ell, mu=mu(I))
    report.powers.append(PowerRecord(1, mu(I), power_bound(ell, mu(I), 1)))
    current = I
    for k in range(2, max_power + 1):
        if mu(current) * mu(I) > generator_budget:
            report.partial = True
            raise BudgetExceededError(
                f"I^{k} would expand {mu(current) * mu(I)} products (budget {generator_budget})",
                partial=report,
            )
        current = product(current, I)
        report.powers.append(PowerRecord(k, mu(current), power_bound(ell, report.mu, k)))
        if k == 2:
            report.mu2 = mu(current)
            report.bound = ell * report.mu - comb(ell, 2)
    return report


def listed_freiman_graphs() -> dict[str, Graph]:
    """The six graphs whose cut ideals are Freiman."""
    return {
        "K2": complete(2),
        "K3": complete(3),
        "P3": path(3),
        "K2+K2": disjoint_union(complete(2), complete(2)),
        "K2+K3": disjoint_union(complete(2), complete(3)),
        "K2#K1K3": clique_sum(complete(2), complete(3), [(2, 1)]),
    }


def match_listed(g: Graph) -> str | None:
    """Name of the listed graph isomorphic to ``g`` (isolated vertices ignored)."""
    h = g.to_networkx()
    h.remove_nodes_from([v for v in list(h.nodes) if h.degree(v) == 0])
    for name, ref in listed_freiman_graphs().items():
        if nx.is_isomorphic(h, ref.to_networkx()):
            return name
    return None


def enumerate_graphs(max_vertices: int, max_edges: int):
    """Labeled graphs on 2..max_vertices vertices, no isolated vertices, 1..max_edges edges.

    Each graph appears once, edges listed in lexicographic order.
    """
    for n in range(2, max_vertices + 1):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for k in range(1, min(max_edges, len(pairs)) + 1):
            for edges in itertools.combinations(pairs, k):
                if len({v for e in edges for v in e}) == n:
                    yield Graph(n, edges)


def classify_small(
    max_vertices: int = 5,
    max_edges: int = 6,
    freiman_only: bool = True,
    generator_budget: int = DEFAULT_GENERATOR_BUDGET,
) -> list[tuple[Graph, bool | None]]:
    """Freiman verdict (k = 2) for every enumerated graph.

    A graph whose square blows the budget is reported with verdict ``None``.
    """
    out = []
    for g in enumerate_graphs(max_vertices, max_edges):
        try:
            verdict = freiman_report(g, 2, generator_budget).is_freiman
        except BudgetExceededError:
            verdict = None
        if verdict or not freiman_only:
            out.append((g, verdict))
    return out
