"""Cut monomials, cut ideals, and the generator descriptions for cycles."""

from __future__ import annotations

import itertools
from typing import Iterable

from .errors import InvalidGraphError, RingMismatchError
from .graph import Graph, components, cycle, induced_on_edges
from .monomial import (
    Monomial,
    MonomialIdeal,
    S,
    T,
    embed,
    ideal_sum,
    intersection,
    minimalize,
    product_all,
    slot,
)


def canonical_cut(g: Graph, a: Iterable[int]) -> frozenset[int]:
    """Representative of {A, A^c} that avoids the pivot vertex n."""
    a = frozenset(a)
    bad = [v for v in a if not 1 <= v <= g.n]
    if bad:
        raise InvalidGraphError(f"cut set mentions unknown vertices {sorted(bad)}")
    return frozenset(g.vertices) - a if g.n in a else a


def cut_vector(g: Graph, a: Iterable[int]) -> tuple[int, ...]:
    """0/1 vector over edges: 1 where the edge crosses (A, A^c)."""
    a = frozenset(a)
    bad = [v for v in a if not 1 <= v <= g.n]
    if bad:
        raise InvalidGraphError(f"cut set mentions unknown vertices {sorted(bad)}")
    return tuple(int((u in a) != (v in a)) for u, v in g.edges)


def cut_monomial(g: Graph, a: Iterable[int]) -> Monomial:
    chi = cut_vector(g, a)
    e = []
    for crossing in chi:
        e.extend((1, 0) if crossing else (0, 1))
    return Monomial(tuple(e))


def _cut_exps(g: Graph) -> set[tuple[int, ...]]:
    # bit v-1 of mask marks vertex v in A; vertex n (the pivot) is never in A
    out = set()
    edges = [(u - 1, v - 1) for u, v in g.edges]
    for mask in range(1 << (g.n - 1)):
        e = []
        for u, v in edges:
            if ((mask >> u) ^ (mask >> v)) & 1:
                e += (1, 0)
            else:
                e += (0, 1)
        out.add(tuple(e))
    return out


def cut_ideal(g: Graph, per_component: bool = False) -> MonomialIdeal:
    """I(G), generated by u_A over the 2^(n-1) subsets A not containing vertex n.

    With ``per_component`` the ideal is assembled as the product of the
    component ideals instead; the result is the same.
    """
    if per_component:
        parts = []
        for comp in components(g):
            comp_set = set(comp)
            labels = [k for k, (u, _) in enumerate(g.edges, start=1) if u in comp_set]
            if labels:
                parts.append(embed(cut_ideal(induced_on_edges(g, labels)), labels, g.m))
        return product_all(parts)
    return minimalize(map(Monomial, _cut_exps(g)), m=g.m)


def cycle_generators_formula(n: int) -> MonomialIdeal:
    """All s_I t_J with I ⊔ J = [n] and |J| ≡ n (mod 2)."""
    if n < 3:
        raise InvalidGraphError(f"cycles need n >= 3, got {n}")
    gens = []
    for bits in itertools.product((0, 1), repeat=n):
        J = [k + 1 for k, b in enumerate(bits) if b]
        if len(J) % 2 == n % 2:
            I = [k + 1 for k, b in enumerate(bits) if not b]
            gens.append(Monomial.from_sets(n, s=I, t=J))
    return minimalize(gens, m=n)


def swap_edge(I: MonomialIdeal, edge: int) -> MonomialIdeal:
    """Exchange s_edge and t_edge in every generator."""
    if not 1 <= edge <= I.m:
        raise RingMismatchError(f"edge {edge} outside 1..{I.m}")
    a, b = slot(edge, S), slot(edge, T)
    gens = []
    for g in I.gens:
        e = list(g.exps)
        e[a], e[b] = e[b], e[a]
        gens.append(Monomial(tuple(e)))
    return minimalize(gens, m=I.m)


def smaller_cycle_parts(n: int) -> tuple[MonomialIdeal, MonomialIdeal]:
    """I(C_{n-1}) t_n and I'(C_{n-1}) s_n inside the ring of C_n."""
    if n < 4:
        raise InvalidGraphError(f"the smaller-cycle decomposition needs n >= 4, got {n}")
    small = cut_ideal(cycle(n - 1))
    swapped = swap_edge(small, n - 1)
    lift = list(range(1, n))
    left = embed(small, lift, n).times(Monomial.var(n, n, T))
    right = embed(swapped, lift, n).times(Monomial.var(n, n, S))
    return left, right


def smaller_cycle_identity(n: int) -> bool:
    left, right = smaller_cycle_parts(n)
    return ideal_sum(left, right) == cut_ideal(cycle(n))


def L_ideal(n: int) -> MonomialIdeal:
    """L(C_n) = I(C_{n-1}) ∩ I'(C_{n-1}), in the ring with n - 1 edges."""
    if n < 4:
        raise InvalidGraphError(f"L(C_n) needs n >= 4, got {n}")
    small = cut_ideal(cycle(n - 1))
    return intersection(small, swap_edge(small, n - 1))


def L_generators_by_pairs(n: int, union_size: int | None = None) -> list[Monomial]:
    """All s_I t_J with I, J ⊆ [n-1], |I ∪ J| = union_size and |I ∩ J| = 1.

    ``union_size`` defaults to n - 1. Subsets of [n-1] can never reach a
    union of size n, so ``union_size=n`` returns an empty list.
    """
    if union_size is None:
        union_size = n - 1
    ground = range(1, n)
    out = []
    for I_bits in itertools.product((0, 1), repeat=n - 1):
        I = {k for k, b in zip(ground, I_bits) if b}
        for J_bits in itertools.product((0, 1), repeat=n - 1):
            J = {k for k, b in zip(ground, J_bits) if b}
            if len(I | J) == union_size and len(I & J) == 1:
                out.append(Monomial.from_sets(n - 1, s=I, t=J))
    return out
