import itertools

import pytest

from cutscope import betti as B
from cutscope import cycles as Y
from cutscope.cuts import L_ideal, cut_ideal
from cutscope.errors import InvalidGraphError
from cutscope.graph import cycle


def test_lex_direction():
    assert Y.lex_greater((1, 3), (2, 3))
    assert not Y.lex_greater((2, 3), (1, 3))
    assert not Y.lex_greater((1, 2), (1, 2))


def test_order_starts_with_largest_sets():
    order = Y.quotient_order(5)
    sizes = [len(q.I) for q in order]
    assert sizes == sorted(sizes, reverse=True)
    assert order[0].I == (1, 2, 3, 4) and order[0].i == 1
    assert len(order) == 4 * 2 ** 3


@pytest.mark.parametrize("n", [4, 5, 6])
def test_colons_are_variable_ideals(n):
    for q, got, want in Y.quotient_colons(n):
        assert got == want
        if got is not None:
            assert len(got) == Y.r_value(q.I, q.i, n)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_quotient_ideal_is_L(n):
    assert Y.quotient_ideal(n) == L_ideal(n)


def test_r_value_range():
    assert Y.r_value((1,), 1, 5) == 3
    assert Y.r_value((1, 2, 3, 4), 4, 5) == 3
    with pytest.raises(ValueError):
        Y.r_value((1, 2), 3, 5)


@pytest.mark.parametrize("n", [4, 5])
def test_lambda_matches_oracle(n):
    t = B.betti(L_ideal(n), 2)
    assert Y.lambda_totals(n) == t.totals()
    assert B.linear_resolution_check(t, n)
    assert Y.lambda_betti(n, -1) == 0
    assert Y.lambda_betti(n, 0) == (n - 1) * 2 ** (n - 2)


@pytest.mark.parametrize("n", [4, 5])
def test_recursion_matches_oracle(n):
    oracle = B.betti(cut_ideal(cycle(n)))
    assert Y.betti_recursion(n) == oracle.totals()
    assert Y.betti_recursion_graded(n) == oracle


def test_recursion_with_given_base():
    assert Y.betti_recursion(4, base=[4, 6, 3]) == [8, 24, 24, 7]
    assert Y.betti_recursion(4, base=[4, 6, 4]) != [8, 24, 24, 7]


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_closed_form_unrolls_recursion(n):
    assert Y.betti_closed_totals(n, [4, 6, 3]) == Y.betti_recursion(n, base=[4, 6, 3])


def test_closed_form_with_j3_term_disagrees():
    assert Y.betti_closed_totals(4, [4, 6, 3], first_lambda=3) != [8, 24, 24, 7]


def test_small_n_rejected():
    for fn in (Y.betti_recursion, Y.lambda_totals, Y.quotient_generators):
        with pytest.raises(InvalidGraphError):
            fn(3)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_order_is_strict_total(n):
    gens = Y.quotient_generators(n)
    assert len(gens) == (n - 1) * 2 ** (n - 2)
    for a in gens:
        assert not Y.precedes(a, a)
    for a, b in itertools.combinations(gens, 2):
        assert Y.precedes(a, b) != Y.precedes(b, a)
    order = Y.quotient_order(n)
    # a total, antisymmetric relation that sorts consistently is transitive along the sort
    for i in range(len(order) - 1):
        assert Y.precedes(order[i], order[i + 1])
    for a, b, c in itertools.islice(itertools.permutations(gens[:14], 3), 3000):
        if Y.precedes(a, b) and Y.precedes(b, c):
            assert Y.precedes(a, c)
