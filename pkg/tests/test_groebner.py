import itertools
import random

import pytest

from closedgraphs.closedness import RefusalError, is_closed_labeling
from closedgraphs.generators import generate
from closedgraphs.graph import Graph
from closedgraphs.groebner import (
    Binomial,
    edge_binomials,
    is_quadratic_groebner,
    monomial,
    reduce,
    s_polynomial,
)
from oracles import random_graph


def f(n, i, j):
    return Binomial(monomial(n, {i: 1}, {j: 1}), monomial(n, {j: 1}, {i: 1}))


def test_edge_binomials():
    assert edge_binomials(generate("path", 3)) == [f(3, 1, 2), f(3, 2, 3)]
    assert edge_binomials(generate("path", 2)) == [f(2, 1, 2)]
    assert edge_binomials(Graph.from_edges(3, [])) == []
    assert str(f(3, 1, 2)) == "x1*y2 - x2*y1"


def test_s_polynomial_examples():
    s = s_polynomial(f(3, 1, 2), f(3, 2, 3))
    assert s == Binomial(monomial(3, {1: 1, 3: 1}, {2: 2}), monomial(3, {2: 2}, {1: 1, 3: 1}))
    assert s.render() == "x1*x3*y2^2 - x2^2*y1*y3"
    assert s_polynomial(f(3, 1, 2), f(3, 1, 2)) is None
    s = s_polynomial(f(3, 1, 2), f(3, 1, 3))
    assert s.render() == "x2*y1*y3 - x3*y1*y2"


def test_s_polynomial_antisymmetric():
    n = 5
    gens = [f(n, i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]
    for a, b in itertools.combinations(gens, 2):
        assert s_polynomial(a, b) == s_polynomial(b, a)


def test_reduce_examples():
    s = s_polynomial(f(3, 1, 2), f(3, 2, 3))
    assert reduce(s, [f(3, 1, 2), f(3, 2, 3)]) is None
    p = s_polynomial(f(3, 1, 2), f(3, 1, 3))
    assert reduce(p, [f(3, 1, 2), f(3, 1, 3)]) == p
    assert reduce(f(3, 1, 2), [f(3, 1, 2)]) is None


def test_coprime_leads_reduce_to_zero():
    n = 6
    gens = [f(n, i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]
    for a, b in itertools.combinations(gens, 2):
        if all(x == 0 or y == 0 for x, y in zip(a.lead, b.lead)):
            assert reduce(s_polynomial(a, b), [a, b]) is None


def test_groebner_examples():
    assert is_quadratic_groebner(generate("path", 3)).ok
    res = is_quadratic_groebner(Graph.from_edges(3, [(1, 2), (1, 3)]))
    assert not res.ok
    assert (res.failure.edge1, res.failure.edge2) == ((1, 2), (1, 3))
    assert res.failure.remainder.render() == "x2*y1*y3 - x3*y1*y2"
    single = is_quadratic_groebner(generate("path", 2))
    assert single.ok and single.pairs_checked == 0


def test_groebner_size_limit():
    with pytest.raises(RefusalError):
        is_quadratic_groebner(generate("path", 13))
    with pytest.raises(RefusalError):
        is_quadratic_groebner(generate("complete", 10))


def test_groebner_matches_closedness_random_n6():
    rng = random.Random(60)
    for _ in range(300):
        n = rng.randint(2, 6)
        g = Graph.from_edges(n, random_graph(n, rng))
        if g.m > 40:
            continue
        assert is_quadratic_groebner(g).ok == (is_closed_labeling(g) is None), g.edges()


def test_groebner_complete_graph():
    assert is_quadratic_groebner(generate("complete", 6)).ok
