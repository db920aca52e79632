import itertools

import pytest

from cutscope.cuts import (
    L_generators_by_pairs,
    L_ideal,
    canonical_cut,
    cut_ideal,
    cut_monomial,
    cut_vector,
    cycle_generators_formula,
    smaller_cycle_identity,
    swap_edge,
)
from cutscope.errors import InvalidGraphError, RingMismatchError
from cutscope.graph import Graph, clique_sum, complete, components, cycle, path
from cutscope.monomial import Monomial, embed, minimalize, mu, product

from conftest import random_graph


def brute_cut_ideal(g):
    """All 2^n subsets, no pivot trick, minimalized by pairwise divisibility."""
    monos = {cut_monomial(g, [v for v in g.vertices if bits >> (v - 1) & 1]) for bits in range(1 << g.n)}
    return {u for u in monos if not any(w != u and w.divides(u) for w in monos)}


def test_triangle_cut_monomial():
    g = cycle(3)
    assert cut_vector(g, {1}) == (1, 0, 1)
    assert cut_monomial(g, {1}) == Monomial.from_sets(3, s=[1, 3], t=[2])
    assert cut_monomial(g, set()) == Monomial.from_sets(3, t=[1, 2, 3])


def test_complement_gives_same_monomial():
    g = cycle(5)
    for a in ({1, 3}, {2}, {1, 2, 5}):
        assert cut_monomial(g, a) == cut_monomial(g, set(g.vertices) - a)
    assert canonical_cut(g, {1, 5}) == frozenset({2, 3, 4})


def test_unknown_vertex():
    with pytest.raises(InvalidGraphError):
        cut_vector(cycle(3), {4})


def test_k2_generators():
    assert [str(u) for u in cut_ideal(complete(2)).gens] == ["s1", "t1"]


def test_generators_are_squarefree_degree_m(rng):
    for _ in range(20):
        g = random_graph(rng, 7)
        I = cut_ideal(g)
        assert I.is_squarefree
        assert set(I.degrees()) == {g.m}


def test_against_brute_force(rng):
    for _ in range(40):
        g = random_graph(rng, 6)
        assert set(cut_ideal(g).gens) == brute_cut_ideal(g)


def test_count_is_two_to_n_minus_c(rng):
    for _ in range(40):
        g = random_graph(rng, 8)
        assert mu(cut_ideal(g)) == 2 ** (g.n - len(components(g)))


def test_per_component_assembly(rng):
    for _ in range(15):
        g = clique_sum(random_graph(rng, 4), random_graph(rng, 4))
        assert cut_ideal(g, per_component=True) == cut_ideal(g)


@pytest.mark.parametrize("n", range(3, 9))
def test_parity_description(n):
    assert cycle_generators_formula(n) == cut_ideal(cycle(n))


@pytest.mark.parametrize("n", range(4, 9))
def test_smaller_cycle_identity(n):
    assert smaller_cycle_identity(n)


def test_swap_edge_involution():
    I = cut_ideal(path(4))
    assert swap_edge(swap_edge(I, 2), 2) == I
    # forests realize every s/t pattern; a cycle only one parity
    assert swap_edge(I, 2) == I
    assert swap_edge(cut_ideal(cycle(4)), 2) != cut_ideal(cycle(4))
    with pytest.raises(RingMismatchError):
        swap_edge(I, 4)


@pytest.mark.parametrize("n", range(4, 8))
def test_L_ideal(n):
    L = L_ideal(n)
    assert set(L.gens) == set(L_generators_by_pairs(n))
    assert mu(L) == (n - 1) * 2 ** (n - 2)
    assert set(L.degrees()) == {n}
    assert L_generators_by_pairs(n, union_size=n) == []


def test_product_over_block(rng):
    for g1 in (complete(2), complete(3), path(3), cycle(4)):
        for g2 in (complete(2), complete(3), path(3), cycle(4)):
            for pairing in ([], [(1, 2)]):
                g = clique_sum(g1, g2, pairing)
                left = embed(cut_ideal(g1), list(range(1, g1.m + 1)), g.m)
                right = embed(cut_ideal(g2), list(range(g1.m + 1, g.m + 1)), g.m)
                assert product(left, right) == cut_ideal(g)


def test_edge_order_matters_only_by_relabeling():
    g = Graph(3, ((1, 2), (1, 3)))
    h = Graph(3, ((1, 3), (1, 2)))
    swapped = minimalize(
        [Monomial(u.exps[2:] + u.exps[:2]) for u in cut_ideal(g).gens], m=2
    )
    assert swapped == cut_ideal(h)


@pytest.mark.parametrize("n", range(4, 8))
def test_L_times_st_is_intersection_of_parts(n):
    from cutscope.cuts import smaller_cycle_parts
    from cutscope.monomial import intersection

    left, right = smaller_cycle_parts(n)
    lifted = embed(L_ideal(n), list(range(1, n)), n).times(Monomial.from_sets(n, s=[n], t=[n]))
    assert intersection(left, right) == lifted
