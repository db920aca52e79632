"""Minimal primes of squarefree monomial ideals as minimal transversals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .cuts import cut_ideal
from .errors import InvalidDecompositionError, UnsupportedInputError
from .graph import Graph, induced_on_edges
from .monomial import Monomial, MonomialIdeal, embed, intersection


def slot_name(i: int) -> str:
    return f"{'st'[i % 2]}{i // 2 + 1}"


@dataclass(frozen=True, order=True)
class VariablePrime:
    """Prime ideal generated by variables, stored as sorted 0-based slots."""

    slots: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.slots)

    def names(self) -> list[str]:
        return [slot_name(i) for i in self.slots]

    def ideal(self, m: int) -> MonomialIdeal:
        gens = []
        for i in self.slots:
            e = [0] * (2 * m)
            e[i] = 1
            gens.append(Monomial(tuple(e)))
        return MonomialIdeal(m, tuple(sorted(gens, key=Monomial.sort_key)))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def minimal_transversals(edges: Sequence[int]) -> list[int]:
    """All inclusion-minimal vertex sets (bitmasks) meeting every edge (bitmask).

    Branches on the uncovered edge with the fewest admissible vertices. A
    branch dies as soon as some chosen vertex has no private edge left, since
    adding vertices never creates one. Vertices tried earlier on the same edge
    are excluded from later siblings, so no transversal is reached twice.
    """
    edges = sorted(set(edges))
    found: set[int] = set()

    def has_private(chosen: int) -> bool:
        return all(
            any(e & chosen == (1 << u) for e in edges) for u in _bits(chosen)
        )

    def rec(chosen: int, banned: int, uncovered: list[int]) -> None:
        if not uncovered:
            found.add(chosen)
            return
        pick = min(uncovered, key=lambda e: bin(e & ~banned).count("1"))
        options = _bits(pick & ~banned)
        for idx, v in enumerate(options):
            new = chosen | (1 << v)
            if not has_private(new):
                continue
            skip = sum(1 << w for w in options[:idx])
            rec(new, banned | skip, [e for e in uncovered if not e >> v & 1])

    rec(0, 0, list(edges))
    return sorted(found, key=lambda t: (bin(t).count("1"), _bits(t)))


def minimal_primes(I: MonomialIdeal) -> list[VariablePrime]:
    if not I.is_squarefree:
        raise UnsupportedInputError("primary decomposition is only supported for squarefree ideals")
    if any(g.degree == 0 for g in I.gens):
        return []
    supports = [sum(1 << i for i, e in enumerate(g.exps) if e) for g in I.gens]
    return [VariablePrime(tuple(_bits(t))) for t in minimal_transversals(supports)]


def height(primes: Sequence[VariablePrime]) -> int:
    return min(len(p) for p in primes)


def decomposition_intersection(I: MonomialIdeal, primes: Sequence[VariablePrime]) -> MonomialIdeal:
    return reduce(intersection, (p.ideal(I.m) for p in primes))


def decompose(g: Graph) -> dict:
    primes = minimal_primes(cut_ideal(g))
    h = height(primes)
    return {
        "primes": [p.names() for p in primes],
        "height": h,
        "dim": 2 * g.m - h,
        "dim_vertex_ring": 2 * g.n - h,
        "conventions": {
            "dim": "ambient ring with 2|E(G)| variables s_k, t_k",
            "dim_vertex_ring": "ambient ring with 2|V(G)| variables",
        },
    }


def _support(g: Graph) -> set[int]:
    return {v for e in g.edges for v in e}


def dim_formula_check(parts: Sequence[Graph]) -> bool:
    """Check the decomposition of I(G_1 ∪ ... ∪ G_r) against its parts.

    The parts share one vertex numbering; their union has the edges of
    G_1, then G_2, and so on. Each part may meet the union of the earlier
    ones in at most one vertex. Verifies that the minimal primes of the union
    are the embedded minimal primes of the parts, that these are pairwise
    incomparable, and that the heights agree.
    """
    seen: set[int] = set()
    for k, part in enumerate(parts):
        if k and len(seen & _support(part)) > 1:
            raise InvalidDecompositionError(
                f"part {k + 1} meets the earlier parts in {len(seen & _support(part))} vertices"
            )
        seen |= _support(part)
    n = max(p.n for p in parts)
    union = Graph(n, tuple(e for p in parts for e in p.edges))
    primes = minimal_primes(cut_ideal(union))
    combined: list[VariablePrime] = []
    offset = 0
    for part in parts:
        local = induced_on_edges(part, range(1, part.m + 1))
        for prime in minimal_primes(cut_ideal(local)):
            combined.append(VariablePrime(tuple(i + 2 * offset for i in prime.slots)))
        offset += part.m
    comparable = any(
        set(a.slots) <= set(b.slots)
        for i, a in enumerate(combined)
        for j, b in enumerate(combined)
        if i != j
    )
    return (
        sorted(primes) == sorted(combined)
        and not comparable
        and height(primes) == height(combined)
    )
