"""Monomials and monomial ideals in S = K[s_1, t_1, ..., s_m, t_m].

A monomial is an exponent vector of length 2m with slots ordered
s_1, t_1, s_2, t_2, ... Ideals always hold their unique minimal generating
set, sorted by (degree, lex) where lex is the usual lexicographic monomial
order with s_1 > t_1 > s_2 > ... .
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

import numpy as np

from . import kernels
from .errors import EmptyIdealError, InvalidExponentError, RingMismatchError

S, T = "s", "t"


def slot(edge: int, letter: str) -> int:
    """0-based exponent slot of s_edge / t_edge."""
    return 2 * (edge - 1) + (0 if letter == S else 1)


@dataclass(frozen=True, order=False)
class Monomial:
    exps: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.exps) // 2

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    @classmethod
    def unit(cls, m: int) -> "Monomial":
        return cls((0,) * (2 * m))

    @classmethod
    def var(cls, m: int, edge: int, letter: str) -> "Monomial":
        if not 1 <= edge <= m:
            raise RingMismatchError(f"edge {edge} outside 1..{m}")
        e = [0] * (2 * m)
        e[slot(edge, letter)] = 1
        return cls(tuple(e))

    @classmethod
    def from_sets(cls, m: int, s: Iterable[int] = (), t: Iterable[int] = ()) -> "Monomial":
        """The squarefree monomial s_I t_J."""
        e = [0] * (2 * m)
        for k in s:
            e[slot(k, S)] += 1
        for k in t:
            e[slot(k, T)] += 1
        return cls(tuple(e))

    def support(self, letter: str) -> list[int]:
        off = 0 if letter == S else 1
        return [k + 1 for k in range(self.m) if self.exps[2 * k + off]]

    def divides(self, other: "Monomial") -> bool:
        _check_ring(self, other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_ring(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exps):
            if e:
                name = f"{'st'[i % 2]}{i // 2 + 1}"
                parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    @classmethod
    def parse(cls, text: str, m: int) -> "Monomial":
        text = text.strip()
        e = [0] * (2 * m)
        if text == "1":
            return cls(tuple(e))
        for factor in text.split("*"):
            match = re.fullmatch(r"\s*([st])(\d+)(?:\^(\d+))?\s*", factor)
            if not match:
                raise ValueError(f"cannot parse monomial factor {factor!r}")
            letter, k, power = match.group(1), int(match.group(2)), int(match.group(3) or 1)
            if not 1 <= k <= m:
                raise RingMismatchError(f"variable {letter}{k} outside a ring with m={m}")
            e[slot(k, letter)] += power
        return cls(tuple(e))

    def sort_key(self):
        return (self.degree, tuple(-x for x in self.exps))


def _check_ring(a: Monomial, b: Monomial) -> None:
    if len(a.exps) != len(b.exps):
        raise RingMismatchError(f"monomials live in rings with m={a.m} and m={b.m}")


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_ring(a, b)
    return Monomial(tuple(max(x, y) for x, y in zip(a.exps, b.exps)))


def colon_mono(a: Monomial, b: Monomial) -> Monomial:
    """a : b = lcm(a, b) / b."""
    _check_ring(a, b)
    return Monomial(tuple(max(x - y, 0) for x, y in zip(a.exps, b.exps)))


class MonomialIdeal:
    """Monomial ideal stored by its canonical minimal generating set.

    Build through :func:`minimalize`; ``gens`` is a sorted tuple.
    """

    __slots__ = ("m", "gens", "_gset")

    def __init__(self, m: int, gens: tuple[Monomial, ...]):
        self.m = m
        self.gens = gens
        self._gset = frozenset(gens)

    @classmethod
    def unit(cls, m: int) -> "MonomialIdeal":
        return cls(m, (Monomial.unit(m),))

    @classmethod
    def variables(cls, m: int, variables: Iterable[tuple[int, str]]) -> "MonomialIdeal":
        return minimalize([Monomial.var(m, k, letter) for k, letter in variables], m=m)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.m == other.m and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.m, self.gens))

    def __repr__(self) -> str:
        shown = ", ".join(map(str, self.gens[:8]))
        more = f", ... ({len(self.gens)} gens)" if len(self.gens) > 8 else ""
        return f"MonomialIdeal(m={self.m}, <{shown}{more}>)"

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersection(self, other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    def degrees(self) -> list[int]:
        return [g.degree for g in self.gens]

    def contains(self, u: Monomial) -> bool:
        return any(g.divides(u) for g in self.gens)

    def is_generator(self, u: Monomial) -> bool:
        return u in self._gset

    def times(self, u: Monomial) -> "MonomialIdeal":
        """The ideal u * I."""
        return MonomialIdeal(self.m, tuple(g * u for g in self.gens))

    def to_dict(self) -> dict:
        return {"m": self.m, "gens": [str(g) for g in self.gens]}

    @classmethod
    def from_dict(cls, data: dict) -> "MonomialIdeal":
        m = int(data["m"])
        return minimalize([Monomial.parse(t, m) for t in data["gens"]], m=m)


def minimalize(gens: Iterable[Monomial], m: int | None = None) -> MonomialIdeal:
    """Canonical ideal generated by ``gens``: duplicates and non-minimal elements dropped."""
    uniq = set(gens)
    if not uniq:
        raise EmptyIdealError("the zero ideal is not supported")
    widths = {len(u.exps) for u in uniq}
    if len(widths) != 1:
        raise RingMismatchError("generators live in different rings")
    width = widths.pop()
    if m is not None and width != 2 * m:
        raise RingMismatchError(f"generators have {width} slots, expected {2 * m}")
    ordered = sorted(uniq, key=Monomial.sort_key)
    degrees = [u.degree for u in ordered]
    if degrees[0] != degrees[-1] and len(ordered) > 1:
        if width and max(max(u.exps) for u in ordered) < 256:
            exps = np.array([u.exps for u in ordered], dtype=np.uint8).reshape(len(ordered), width)
            keep = kernels.minimal_mask(exps, np.array(degrees, dtype=np.int64))
        else:
            keep = kernels.get_backend("python").minimal_mask([u.exps for u in ordered], degrees)
        ordered = [u for u, k in zip(ordered, keep) if k]
    # equal-degree distinct monomials never divide each other
    return MonomialIdeal(width // 2, tuple(ordered))


def _check_ideals(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.m != J.m:
        raise RingMismatchError(f"ideals live in rings with m={I.m} and m={J.m}")


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_ideals(I, J)
    return minimalize((a * b for a in I.gens for b in J.gens), m=I.m)


def intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_ideals(I, J)
    return minimalize((lcm(a, b) for a in I.gens for b in J.gens), m=I.m)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_ideals(I, J)
    return minimalize(I.gens + J.gens, m=I.m)


def colon_ideal(I: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    if len(v.exps) != 2 * I.m:
        raise RingMismatchError(f"monomial has m={v.m}, ideal has m={I.m}")
    return minimalize((colon_mono(u, v) for u in I.gens), m=I.m)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise InvalidExponentError(f"ideal powers need k >= 1, got {k}")
    out = I
    for _ in range(k - 1):
        out = product(out, I)
    return out


def mu(I: MonomialIdeal) -> int:
    return len(I.gens)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _check_ideals(I, J)
    return I.gens == J.gens


def product_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    return reduce(product, ideals)


def embed(I: MonomialIdeal, edge_map: dict[int, int] | list[int], m: int) -> MonomialIdeal:
    """Move ``I`` into a ring with ``m`` edges; edge k goes to ``edge_map[k]``.

    ``edge_map`` may be a list, read as edge k -> edge_map[k - 1].
    """
    if isinstance(edge_map, (list, tuple)):
        edge_map = {k: v for k, v in enumerate(edge_map, start=1)}
    gens = []
    for g in I.gens:
        e = [0] * (2 * m)
        for k in range(1, I.m + 1):
            dst = edge_map[k]
            e[slot(dst, S)] = g.exps[slot(k, S)]
            e[slot(dst, T)] = g.exps[slot(k, T)]
        gens.append(Monomial(tuple(e)))
    return minimalize(gens, m=m)


def embed_at_offset(I: MonomialIdeal, offset: int, m: int) -> MonomialIdeal:
    return embed(I, [k + offset for k in range(1, I.m + 1)], m)
