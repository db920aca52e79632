"""Betti numbers of cycle cut ideals through the linear quotients of L(C_n).

Generators of L(C_n) are v_{I,i} = s_I t_J with J = ([n-1] \\ I) ∪ {i}, i ∈ I.
Ordering them by decreasing |I|, then by the reversed lexicographic rule on
equal-size sets, then by increasing i, every colon ideal by the earlier
generators is generated by variables, and the Betti numbers of L(C_n) are
sums of binomial coefficients. Combined with the splitting of I(C_n) into
I(C_{n-1}) t_n + I'(C_{n-1}) s_n this gives a recursion for beta_i(I(C_n)).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .betti import DEFAULT_PRIME, BettiTable, betti
from .cuts import cut_ideal
from .errors import InvalidGraphError
from .graph import cycle
from .monomial import Monomial, MonomialIdeal, S, T, colon_ideal, minimalize


def _need(n: int, lo: int = 4) -> None:
    if n < lo:
        raise InvalidGraphError(f"need n >= {lo}, got {n}")


@dataclass(frozen=True)
class QuotientGenerator:
    n: int
    I: tuple[int, ...]
    i: int

    def __post_init__(self):
        if self.i not in self.I:
            raise ValueError(f"{self.i} is not in {set(self.I)}")

    @property
    def J(self) -> tuple[int, ...]:
        return tuple(sorted(set(range(1, self.n)) - set(self.I) | {self.i}))

    @property
    def monomial(self) -> Monomial:
        return Monomial.from_sets(self.n - 1, s=self.I, t=self.J)

    def expected_colon(self) -> MonomialIdeal | None:
        """<t_k : k ∈ I, k < i> + <s_k : k ∉ I>, or None when that set is empty."""
        m = self.n - 1
        variables = [(k, T) for k in self.I if k < self.i]
        variables += [(k, S) for k in range(1, self.n) if k not in self.I]
        return MonomialIdeal.variables(m, variables) if variables else None


def lex_greater(a: Sequence[int], b: Sequence[int]) -> bool:
    """``a > b`` for equal-size sets: at the first difference a has the smaller element."""
    for x, y in zip(sorted(a), sorted(b)):
        if x != y:
            return x < y
    return False


def precedes(a: QuotientGenerator, b: QuotientGenerator) -> bool:
    """a < b in the linear-quotients order."""
    if len(a.I) != len(b.I):
        return len(a.I) > len(b.I)
    if a.I != b.I:
        return lex_greater(b.I, a.I)
    return a.i < b.i


def quotient_generators(n: int) -> list[QuotientGenerator]:
    _need(n)
    out = []
    for size in range(1, n):
        for I in itertools.combinations(range(1, n), size):
            out.extend(QuotientGenerator(n, I, i) for i in I)
    return out


def quotient_order(n: int) -> list[QuotientGenerator]:
    def cmp(a, b):
        return -1 if precedes(a, b) else (1 if precedes(b, a) else 0)

    return sorted(quotient_generators(n), key=functools.cmp_to_key(cmp))


def quotient_colons(n: int) -> list[tuple[QuotientGenerator, MonomialIdeal | None, MonomialIdeal | None]]:
    """(generator, computed colon by earlier generators, stated variable ideal) per position."""
    order = quotient_order(n)
    rows = []
    earlier: list[Monomial] = []
    m = n - 1
    for q in order:
        v = q.monomial
        got = colon_ideal(MonomialIdeal(m, tuple(earlier)), v) if earlier else None
        rows.append((q, got, q.expected_colon()))
        earlier.append(v)
    return rows


def quotient_colon_check(n: int) -> bool:
    return all(got == want for _, got, want in quotient_colons(n))


def quotient_ideal(n: int) -> MonomialIdeal:
    return minimalize([q.monomial for q in quotient_generators(n)], m=n - 1)


def r_value(I: Sequence[int], i: int, n: int) -> int:
    """Number of variables generating the colon ideal at v_{I,i}."""
    if i not in I:
        raise ValueError(f"{i} is not in {set(I)}")
    return sum(1 for k in I if k < i) + sum(1 for k in range(1, n) if k not in I)


def _lambda(n: int, j: int) -> int:
    if j < 0:
        return 0
    total = 0
    for size in range(1, n):
        for I in itertools.combinations(range(1, n), size):
            total += sum(comb(r_value(I, i, n), j) for i in I)
    return total


def lambda_betti(n: int, j: int) -> int:
    """beta_j(L(C_n)) from the linear-quotients formula; zero for j < 0."""
    _need(n)
    return _lambda(n, j)


def lambda_totals(n: int) -> list[int]:
    _need(n)
    out = []
    j = 0
    while True:
        v = _lambda(n, j)
        if not v:
            return out
        out.append(v)
        j += 1


def base_triangle(p: int = DEFAULT_PRIME) -> BettiTable:
    return betti(cut_ideal(cycle(3)), p)


def betti_recursion(n: int, p: int = DEFAULT_PRIME, base: Sequence[int] | None = None) -> list[int]:
    """Total Betti numbers of I(C_n) via beta_i^n = 2 beta_i^{n-1} + lambda_{i-1}^n.

    The n = 3 starting values come from the homology oracle unless given.
    """
    _need(n)
    betas = list(base) if base is not None else base_triangle(p).totals()
    for r in range(4, n + 1):
        lam = lambda_totals(r)
        size = max(len(betas), len(lam) + 1)
        betas = [
            2 * (betas[i] if i < len(betas) else 0) + (lam[i - 1] if 0 < i <= len(lam) else 0)
            for i in range(size)
        ]
    return betas


def betti_recursion_graded(n: int, p: int = DEFAULT_PRIME, base: BettiTable | None = None) -> BettiTable:
    """Graded form of the recursion.

    I(C_{n-1}) t_n and I'(C_{n-1}) s_n contribute the C_{n-1} table shifted by
    one internal degree; the L(C_n) s_n t_n part contributes lambda_{i-1}^n in
    degree n + 1 + i, where its linear resolution puts it.
    """
    _need(n)
    table = dict((base or base_triangle(p)).entries)
    for r in range(4, n + 1):
        nxt: dict[tuple[int, int], int] = {}
        for (i, j), v in table.items():
            nxt[(i, j + 1)] = nxt.get((i, j + 1), 0) + 2 * v
        for i, lam in enumerate(lambda_totals(r), start=1):
            key = (i, r + 1 + i)
            nxt[key] = nxt.get(key, 0) + lam
        table = nxt
    return BettiTable(p, table)


def betti_closed(n: int, i: int, base: Sequence[int], first_lambda: int = 4) -> int:
    """2^{n-3} beta_i^3 + sum_{j=first_lambda}^{n} 2^{n-j} lambda_{i-1}^j.

    ``first_lambda=4`` is the unrolled recursion. ``first_lambda=3`` also adds
    a j = 3 term, evaluated by extending the lambda formula to n = 3.
    """
    _need(n)
    b3 = base[i] if 0 <= i < len(base) else 0
    return 2 ** (n - 3) * b3 + sum(2 ** (n - j) * _lambda(j, i - 1) for j in range(first_lambda, n + 1))


def betti_closed_totals(n: int, base: Sequence[int], first_lambda: int = 4) -> list[int]:
    out = []
    i = 0
    while True:
        v = betti_closed(n, i, base, first_lambda)
        if not v and i >= len(base):
            return out
        out.append(v)
        i += 1
