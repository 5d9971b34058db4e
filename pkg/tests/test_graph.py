import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from collabdist import (
    CollaborationGraph,
    build_graph,
    collaboration_count,
    components,
    connected_component,
)
from collabdist.errors import NonPositiveCount, SelfEdge, UnknownNode

from helpers import closure_reachability, random_graph

labels = st.sampled_from(list("ABCDEFGH"))
edge_lists = st.lists(
    st.tuples(labels, labels, st.integers(1, 9)).filter(lambda e: e[0] != e[1]),
    max_size=30,
)


def test_build_illustration(illustration):
    g = illustration
    assert (g.n_nodes, g.n_edges) == (3, 2)
    assert g.labels == ("A", "B", "C")
    assert collaboration_count(g, 0, 1) == 2
    assert collaboration_count(g, 1, 2) == 4


def test_build_empty():
    g = build_graph([])
    assert (g.n_nodes, g.n_edges) == (0, 0)
    assert components(g) == []


def test_duplicate_pairs_are_summed():
    g = build_graph([("A", "B", 1), ("B", "A", 2)])
    assert g.n_edges == 1
    assert collaboration_count(g, 0, 1) == 3


def test_labels_trimmed_not_normalised():
    g = build_graph([("  A ", "B", 1), ("A", "b", 1)])
    assert g.labels == ("A", "B", "b")
    assert g.node_id(" A") == 0


@pytest.mark.parametrize(
    "edges, exc",
    [
        ([("A", "A", 1)], SelfEdge),
        ([("A", " A ", 1)], SelfEdge),
        ([("A", "B", 0)], NonPositiveCount),
        ([("A", "B", -3)], NonPositiveCount),
        ([("A", "B", 1.5)], NonPositiveCount),
    ],
)
def test_build_rejects(edges, exc):
    with pytest.raises(exc):
        build_graph(edges)


def test_collaboration_count_absent_and_self(illustration):
    assert collaboration_count(illustration, 0, 2) == 0
    assert collaboration_count(illustration, 1, 1) == 0


@pytest.mark.parametrize("a, b", [(0, 3), (-1, 0), (0, 99)])
def test_unknown_node(illustration, a, b):
    with pytest.raises(UnknownNode):
        collaboration_count(illustration, a, b)


def test_unknown_label(illustration):
    with pytest.raises(UnknownNode):
        illustration.node_id("Z")


def test_graph_is_immutable(illustration):
    with pytest.raises(AttributeError):
        illustration.labels = ()
    with pytest.raises(ValueError):
        illustration.counts[0] = 7


def test_components_examples(illustration):
    assert connected_component(illustration, 0) == {0, 1, 2}
    assert components(illustration) == [{0, 1, 2}]
    g = build_graph([("A", "B", 1), ("C", "D", 1)])
    assert connected_component(g, g.node_id("A")) == {0, 1}
    assert components(g) == [{0, 1}, {2, 3}]


def test_from_arrays_matches_build_graph():
    g1 = build_graph([("0", "1", 2), ("2", "1", 1), ("1", "0", 1)])
    g2 = CollaborationGraph.from_arrays(3, [0, 2, 1], [1, 1, 0], [2, 1, 1])
    assert g1 == g2


@given(edge_lists)
def test_adjacency_symmetric_and_sorted(edges):
    g = build_graph(edges)
    for a in range(g.n_nodes):
        nbrs, _ = g.neighbors(a)
        assert list(nbrs) == sorted(nbrs)
        assert a not in nbrs
        for b in range(g.n_nodes):
            assert collaboration_count(g, a, b) == collaboration_count(g, b, a)
    assert g.indptr[-1] == 2 * g.n_edges
    assert (g.counts >= 1).all()


@given(edge_lists, st.randoms(use_true_random=False))
def test_merge_is_order_independent(edges, rnd):
    shuffled = edges + edges[: len(edges) // 2]
    rnd.shuffle(shuffled)
    g1, g2 = build_graph(edges + edges[: len(edges) // 2]), build_graph(shuffled)
    by_label = lambda g: {
        frozenset((g.labels[a], g.labels[b])): c for a, b, c in g.edges()
    }
    assert by_label(g1) == by_label(g2)
    expected = {}
    for a, b, c in edges + edges[: len(edges) // 2]:
        key = frozenset((a, b))
        expected[key] = expected.get(key, 0) + c
    assert by_label(g1) == expected


@settings(max_examples=60)
@given(st.integers(0, 2**32 - 1), st.integers(1, 12))
def test_components_match_transitive_closure(seed, n):
    g = random_graph(np.random.default_rng(seed), n, p=0.15)
    reach = closure_reachability(g)
    cells = components(g)
    assert sorted(v for c in cells for v in c) == list(range(g.n_nodes))
    for a in range(g.n_nodes):
        expected = set(np.flatnonzero(reach[a]).tolist())
        assert connected_component(g, a) == expected
        assert next(c for c in cells if a in c) == expected
