import random

import numpy as np
import pytest

from closedgraphs.cliques import (
    DENSE_LIMIT,
    FacetList,
    IncidenceMatrix,
    consecutive_ones,
    facets_of_closed,
    incidence_matrix,
)
from closedgraphs.closedness import brute_force_closed
from closedgraphs.generators import generate
from closedgraphs.graph import ContractViolation, Graph, apply_labeling
from closedgraphs.intervals import compute_b
from closedgraphs.recognition import ordering_to_closed_labeling, recognize_proper_interval
from oracles import maximal_cliques, random_connected, random_graph


def _closed_relabel(g: Graph) -> Graph:
    r = recognize_proper_interval(g)
    return ordering_to_closed_labeling(g, r.ordering).graph


def test_facet_examples():
    assert facets_of_closed(generate("path", 3)).facets == ((1, 2), (2, 3))
    assert facets_of_closed(generate("complete", 5)).facets == ((1, 5),)
    g = Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    assert facets_of_closed(g).facets == ((1, 3), (2, 4))


def test_facets_reject_non_closed():
    with pytest.raises(ContractViolation, match="not closed"):
        facets_of_closed(Graph.from_edges(3, [(1, 2), (1, 3)]))


def test_facets_reject_interleaved_components():
    with pytest.raises(ContractViolation, match="component"):
        facets_of_closed(Graph.from_edges(4, [(1, 3), (2, 4)]))


def test_facets_match_clique_enumeration_small():
    rng = random.Random(6)
    checked = 0
    for _ in range(1500):
        n = rng.randint(1, 8)
        g = Graph.from_edges(n, random_connected(n, rng))
        sigma = brute_force_closed(g)
        if sigma is None:
            continue
        h = apply_labeling(g, sigma)
        f = facets_of_closed(h)
        cliques = maximal_cliques(n, h.edges())
        assert {tuple(range(a, b + 1)) for a, b in f} == cliques
        f.check(connected=True)
        if len(f) >= 2:
            a_s = [a for a, _ in f]
            assert a_s[-1] < n
        checked += 1
    assert checked > 200


def test_facets_disconnected_touch_between_components():
    g = _closed_relabel(Graph.from_edges(6, [(1, 2), (2, 3), (5, 6)]))
    f = facets_of_closed(g)
    f.check(connected=False)
    assert {tuple(range(a, b + 1)) for a, b in f} == maximal_cliques(6, g.edges())


def test_two_routes_to_b():
    rng = random.Random(10)
    for _ in range(300):
        n = rng.randint(1, 40)
        g = generate("random_unit_interval", n, length=rng.uniform(0.01, 0.5), seed=rng.randrange(10**6))
        h = _closed_relabel(g)
        b = compute_b(facets_of_closed(h), n)
        direct = [max([k] + h.neighbors(k)) for k in range(1, n + 1)]
        assert b.tolist() == direct


def test_incidence_examples():
    m = incidence_matrix(FacetList(3, ((1, 2), (2, 3))), 3)
    assert m.dense.tolist() == [[1, 1, 0], [0, 1, 1]]
    m = incidence_matrix(FacetList(4, ((1, 3), (2, 4))), 4)
    assert m.dense.tolist() == [[1, 1, 1, 0], [0, 1, 1, 1]]
    m = incidence_matrix(FacetList(5, ((1, 5),)), 5)
    assert m.dense.tolist() == [[1] * 5]
    assert m.to_text() == "1 1 1 1 1\n"


def test_c1p_examples():
    assert consecutive_ones(IncidenceMatrix.from_dense([[1, 1, 0], [0, 1, 1]]))
    assert not consecutive_ones(IncidenceMatrix.from_dense([[1, 0, 1]]))
    assert consecutive_ones(IncidenceMatrix.from_dense(np.ones((3, 4))))
    # rows fine, a column broken
    assert not consecutive_ones(IncidenceMatrix.from_dense([[1, 1], [0, 1], [1, 1]]))


def test_c1p_for_closed_labelings():
    rng = random.Random(17)
    for _ in range(500):
        n = rng.randint(1, 9)
        g = Graph.from_edges(n, random_graph(n, rng))
        r = recognize_proper_interval(g)
        if r.ordering is None:
            continue
        h = ordering_to_closed_labeling(g, r.ordering).graph
        assert consecutive_ones(incidence_matrix(facets_of_closed(h), n))


def test_implicit_matrix_above_dense_limit():
    n = DENSE_LIMIT + 500
    g = generate("random_unit_interval", n, length=5.0 / n, seed=2)
    h = _closed_relabel(g)
    m = incidence_matrix(facets_of_closed(h), n)
    assert m.dense is None and m.intervals
    assert consecutive_ones(m)
    broken = IncidenceMatrix(n, ((1, 5), (3, 4), (4, 9)), None)
    assert not consecutive_ones(broken)
