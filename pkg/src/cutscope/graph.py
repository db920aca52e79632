"""Finite simple graphs with a fixed edge labeling.

Vertices are ``1..n``. The position of an edge in ``Graph.edges`` is its
label (1-based), and that label picks the variable pair ``s_k, t_k`` of the
ambient polynomial ring, so edge order is part of a graph's identity.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx

from .errors import InvalidGraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise InvalidGraphError(f"vertex count must be an integer, got {self.n!r}")
        if self.n < 2:
            raise InvalidGraphError(f"a graph needs at least 2 vertices, got {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        if not edges:
            raise InvalidGraphError("a graph needs at least one edge")
        seen = set()
        for u, v in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidGraphError(f"edge {{{u},{v}}} leaves the vertex range 1..{self.n}")
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise InvalidGraphError(f"duplicate edge {{{u},{v}}}")
            seen.add(key)
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for k, (u, v) in enumerate(self.edges, start=1):
            g.add_edge(u, v, label=k)
        return g

    # -- JSON ---------------------------------------------------------------

    def to_dict(self) -> dict:
        return {"vertices": self.n, "edges": [[u, v] for u, v in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> "Graph":
        if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
            raise InvalidGraphError('graph JSON needs "vertices" and "edges"')
        edges = data["edges"]
        if not isinstance(edges, list) or any(
            not isinstance(e, (list, tuple)) or len(e) != 2 for e in edges
        ):
            raise InvalidGraphError("edges must be a list of [u, v] pairs")
        return cls(data["vertices"], tuple(tuple(e) for e in edges))

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))


def _check_family(name: str, n: int, lo: int) -> None:
    if n < lo:
        raise InvalidGraphError(f"{name}({n}) is undefined; need n >= {lo}")


def cycle(n: int) -> Graph:
    """C_n with e_i = {i, i+1} for i < n and e_n = {1, n}."""
    _check_family("cycle", n, 3)
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def path(n: int) -> Graph:
    """P_n on n vertices (n - 1 edges)."""
    _check_family("path", n, 2)
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def complete(n: int) -> Graph:
    _check_family("complete", n, 2)
    return Graph(n, tuple(itertools.combinations(range(1, n + 1), 2)))


def clique_sum(g1: Graph, g2: Graph, pairing: Sequence[tuple[int, int]] = ()) -> Graph:
    """Glue ``g2`` onto ``g1`` along at most one identified vertex.

    ``pairing`` is empty (disjoint union) or a single ``(vertex of g1,
    vertex of g2)`` pair. Vertices of ``g1`` keep their numbers; the
    remaining vertices of ``g2`` follow in increasing order. Edges of
    ``g1`` come first, so they own labels ``1..g1.m``.
    """
    pairing = [tuple(p) for p in pairing]
    if len(pairing) > 1:
        raise InvalidGraphError("only 0-clique sums (at most one shared vertex) are supported")
    for a, b in pairing:
        if not 1 <= a <= g1.n or not 1 <= b <= g2.n:
            raise InvalidGraphError(f"pairing ({a}, {b}) references a missing vertex")
    shared = dict((b, a) for a, b in pairing)
    relabel = {}
    nxt = g1.n + 1
    for v in g2.vertices:
        if v in shared:
            relabel[v] = shared[v]
        else:
            relabel[v] = nxt
            nxt += 1
    edges = g1.edges + tuple((relabel[u], relabel[v]) for u, v in g2.edges)
    # cannot happen for one shared vertex, kept as a guard
    if len(set(map(frozenset, edges))) != len(edges):
        raise InvalidGraphError("clique sum produced a duplicate edge")
    return Graph(nxt - 1, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    out = graphs[0]
    for g in graphs[1:]:
        out = clique_sum(out, g)
    return out


def components(g: Graph) -> list[list[int]]:
    """Vertex partition into connected components, ordered by smallest vertex."""
    parent = list(range(g.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    parts: dict[int, list[int]] = {}
    for v in g.vertices:
        parts.setdefault(find(v), []).append(v)
    return sorted(parts.values(), key=lambda p: p[0])


def induced_on_edges(g: Graph, labels: Iterable[int]) -> Graph:
    """Subgraph spanned by the given edge labels, vertices renumbered 1..k in order."""
    labels = sorted(labels)
    verts = sorted({v for k in labels for v in g.edges[k - 1]})
    pos = {v: i for i, v in enumerate(verts, start=1)}
    return Graph(len(verts), tuple((pos[g.edges[k - 1][0]], pos[g.edges[k - 1][1]]) for k in labels))


def block_factors(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Split ``g`` into blocks (maximal 2-connected pieces and bridges).

    Returns ``(block graph, original edge labels)`` pairs ordered so that every
    block shares at most one vertex with the union of the earlier ones.
    """
    nxg = g.to_networkx()
    blocks = []
    for comp in components(g):
        sub = nxg.subgraph(comp)
        if sub.number_of_edges() == 0:
            continue
        raw = [frozenset(sub.edges[e]["label"] for e in b) for b in nx.biconnected_component_edges(sub)]
        raw.sort(key=min)
        # walk the block-cut tree so each new block touches the covered part in one vertex
        covered: set[int] = set()
        pending = list(raw)
        while pending:
            for idx, b in enumerate(pending):
                verts = {v for k in b for v in g.edges[k - 1]}
                if not covered or verts & covered:
                    break
            b = pending.pop(idx)
            covered |= {v for k in b for v in g.edges[k - 1]}
            blocks.append(b)
    return [(induced_on_edges(g, b), sorted(b)) for b in blocks]


def is_cycle_labeling(g: Graph) -> bool:
    """True iff ``g`` is C_n with exactly the standard edge labeling (up to pair orientation)."""
    if g.n < 3 or g.m != g.n:
        return False
    std = cycle(g.n)
    return all(frozenset(a) == frozenset(b) for a, b in zip(g.edges, std.edges))
