import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from closedgraphs.generators import generate
from closedgraphs.graph import (
    ContractViolation,
    Graph,
    LabeledGraph,
    ParseError,
    SelfLoopError,
    VertexOrdering,
    VertexRangeError,
    apply_labeling,
    format_edge_list,
    parse_edge_list,
)
from closedgraphs.recognition import recognize_proper_interval
from oracles import random_graph


def test_parse_simple():
    g = parse_edge_list("1 2\n2 3")
    assert g.n == 3 and g.m == 2
    assert g.edges() == [(1, 2), (2, 3)]
    g.check()


def test_parse_header_isolated_vertices():
    g = parse_edge_list("n 4\n1 2")
    assert g.n == 4 and g.edges() == [(1, 2)]
    assert g.neighbors(3) == [] and g.neighbors(4) == []


def test_parse_skips_comments_blank_and_duplicates():
    g = parse_edge_list("# a comment\n\n2 1\n1 2\n  \n3 2\n")
    assert g.edges() == [(1, 2), (2, 3)]


def test_parse_self_loop():
    with pytest.raises(SelfLoopError):
        parse_edge_list("1 1")


@pytest.mark.parametrize(
    "text, line",
    [("1 2\n2 x", 2), ("1 2 3", 1), ("0 1", 1), ("1 -2", 1), ("n 3\n1 2\nn 4", 3)],
)
def test_parse_malformed_reports_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_parse_range_error():
    with pytest.raises(VertexRangeError):
        parse_edge_list("n 3\n1 4")


def test_canonical_serialization_round_trip():
    g = parse_edge_list("3 1\n2 1\n")
    text = format_edge_list(g)
    assert text == "n 3\n1 2\n1 3\n"
    assert parse_edge_list(text) == g


def test_apply_labeling_identity():
    g = generate("path", 3)
    assert apply_labeling(g, VertexOrdering.identity(3)) == g


def test_apply_labeling_hand_example():
    g = Graph.from_edges(3, [(1, 2), (1, 3)])
    h = apply_labeling(g, VertexOrdering((2, 1, 3)))
    assert h.edges() == [(1, 2), (2, 3)]


def test_apply_labeling_rejects_non_permutation():
    g = generate("path", 3)
    with pytest.raises(ContractViolation):
        VertexOrdering((1, 1, 3))
    with pytest.raises(ContractViolation):
        apply_labeling(g, VertexOrdering((1, 2)))


def test_labeling_round_trip_1000_pairs():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(1, 9)
        g = Graph.from_edges(n, random_graph(n, rng))
        order = list(range(1, n + 1))
        rng.shuffle(order)
        sigma = VertexOrdering(order)
        h = apply_labeling(g, sigma)
        h.check()
        assert h.m == g.m
        assert apply_labeling(h, sigma.inverse()) == g


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_relabeled_edges_match(data):
    n = data.draw(st.integers(1, 8))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    order = data.draw(st.permutations(list(range(1, n + 1))))
    g = Graph.from_edges(n, edges)
    sigma = VertexOrdering(order)
    h = apply_labeling(g, sigma)
    expected = {tuple(sorted((int(sigma.pos[u]), int(sigma.pos[v])))) for u, v in edges}
    assert h.edge_set() == expected


def test_ordering_inverse_and_positions():
    sigma = VertexOrdering((3, 1, 2))
    assert sigma.pos[1:].tolist() == [2, 3, 1]
    assert all(sigma.pos[v] == i + 1 for i, v in enumerate(sigma))
    assert sigma.inverse().inverse() == sigma


def test_components_ordered_by_smallest_vertex():
    g = Graph.from_edges(6, [(5, 2), (1, 4), (4, 6)])
    assert g.components() == [[1, 4, 6], [2, 5], [3]]
    assert not g.is_connected()


def test_labeled_graph_size_check():
    with pytest.raises(ContractViolation):
        LabeledGraph(generate("path", 3), VertexOrdering.identity(2))


def test_generate_examples():
    assert generate("path", 3).edges() == [(1, 2), (2, 3)]
    assert generate("claw").edges() == [(1, 2), (1, 3), (1, 4)]
    assert generate("cycle", 4).edges() == [(1, 2), (1, 4), (2, 3), (3, 4)]
    assert generate("complete", 4).m == 6
    assert generate("star", 4).edges() == [(1, 2), (1, 3), (1, 4), (1, 5)]


@pytest.mark.parametrize(
    "kind, kwargs",
    [("path", {"n": 0}), ("cycle", {"n": 2}), ("random_gnm", {"n": 4, "m": 7}),
     ("random_unit_interval", {"n": 5, "length": 0}), ("hypercube", {"n": 3})],
)
def test_generate_invalid_params(kind, kwargs):
    with pytest.raises(ContractViolation):
        generate(kind, **kwargs)


def test_generate_deterministic():
    a = generate("random_gnm", 30, m=100, seed=5)
    b = generate("random_gnm", 30, m=100, seed=5)
    assert a == b and a.m == 100
    assert generate("random_gnm", 30, m=100, seed=6) != a
    u1 = generate("random_unit_interval", 200, length=0.05, seed=3)
    u2 = generate("random_unit_interval", 200, length=0.05, seed=3)
    assert u1 == u2
    u1.check()


def test_random_unit_interval_matches_its_intervals():
    from closedgraphs.generators import random_unit_interval

    g, x = random_unit_interval(60, 0.1, seed=9)
    expected = {
        (u, v)
        for u in range(1, 61)
        for v in range(u + 1, 61)
        if abs(x[u - 1] - x[v - 1]) <= 0.1
    }
    assert g.edge_set() == expected


def test_random_unit_interval_n1000_recognized():
    g = generate("random_unit_interval", 1000, length=0.01, seed=1234)
    assert recognize_proper_interval(g).is_proper_interval


@pytest.mark.parametrize("seed", range(20))
def test_random_unit_interval_always_recognized(seed):
    n = 50 + 40 * seed
    g = generate("random_unit_interval", n, length=3.0 / n, seed=seed)
    assert recognize_proper_interval(g).is_proper_interval


def test_from_arrays_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_arrays(3, np.array([1]), np.array([1]))
    with pytest.raises(ValueError):
        Graph.from_arrays(3, np.array([1]), np.array([4]))
