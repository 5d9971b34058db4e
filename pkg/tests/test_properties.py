"""Property tests: metric axioms and the weighted/unweighted inequalities."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from collabdist import (
    CollaborationGraph,
    Metric,
    a_numbers_from,
    build_graph,
    collaboration_count,
    enumerate_path_lengths,
    geodesic,
    weighted_a_numbers_from,
)

from helpers import floyd_warshall
from strategies import connected_graphs


def all_pairs(g):
    return (
        [a_numbers_from(g, s) for s in range(g.n_nodes)],
        [weighted_a_numbers_from(g, s) for s in range(g.n_nodes)],
    )


@settings(max_examples=80, deadline=None)
@given(connected_graphs())
def test_metric_axioms(g):
    for d in all_pairs(g):
        n = g.n_nodes
        for a in range(n):
            for b in range(n):
                assert (d[a][b] == 0) == (a == b)
                assert d[a][b] == d[b][a]
                for c in range(n):
                    assert d[a][b] <= d[a][c] + d[c][b]


@settings(max_examples=80, deadline=None)
@given(connected_graphs())
def test_weighted_never_exceeds_unweighted_nor_reciprocal_count(g):
    unweighted, weighted = all_pairs(g)
    for a in range(g.n_nodes):
        for b in range(g.n_nodes):
            assert weighted[a][b] <= unweighted[a][b]
            count = collaboration_count(g, a, b)
            if count:
                assert weighted[a][b] <= Fraction(1, count) <= 1


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.data())
def test_summed_pairwise_distances_bound_endpoint_distance(g, data):
    unweighted, weighted = all_pairs(g)
    walk = data.draw(st.lists(st.integers(0, g.n_nodes - 1), min_size=1, max_size=8))
    for d in (unweighted, weighted):
        assert sum(d[x][y] for x, y in zip(walk, walk[1:])) >= d[walk[0]][walk[-1]]


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.data())
def test_geodesic_prefixes_are_geodesics(g, data):
    s = data.draw(st.integers(0, g.n_nodes - 1))
    t = data.draw(st.integers(0, g.n_nodes - 1))
    for mode, batch in ((Metric.UNWEIGHTED, a_numbers_from), (Metric.WEIGHTED, weighted_a_numbers_from)):
        path = geodesic(g, s, t, mode)
        dist = batch(g, s)
        assert path.total == dist[t] == sum(path.edge_weights)
        running = 0
        for v, w in zip(path.vertices[1:], path.edge_weights):
            running += w
            assert dist[v] == running
        for x, y, w in zip(path.vertices, path.vertices[1:], path.edge_weights):
            c = collaboration_count(g, x, y)
            assert c > 0
            assert w == (Fraction(1, c) if mode is Metric.WEIGHTED else 1)


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_unit_counts_make_both_metrics_agree(g):
    ones = build_graph([(g.labels[a], g.labels[b], 1) for a, b, _ in g.edges()]) if g.n_edges else g
    unweighted, weighted = all_pairs(ones)
    assert unweighted == weighted


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_nodes=8))
def test_brute_force_and_floyd_warshall_agree(g):
    fw = {False: floyd_warshall(g, False), True: floyd_warshall(g, True)}
    unweighted, weighted = all_pairs(g)
    for a in range(g.n_nodes):
        for b in range(g.n_nodes):
            for mode, table in ((Metric.UNWEIGHTED, unweighted), (Metric.WEIGHTED, weighted)):
                brute = min(length for _, length in enumerate_path_lengths(g, a, b, mode))
                assert brute == table[a][b] == fw[mode is Metric.WEIGHTED][a][b]


@given(st.lists(st.integers(10**12, 10**15), min_size=1, max_size=2))
def test_certified_falls_back_when_weights_are_tiny(counts):
    # edge weights near 1e-15 defeat the float error bound; result must stay exact
    n = len(counts) + 1
    g = CollaborationGraph.from_arrays(n, range(n - 1), range(1, n), counts)
    got = weighted_a_numbers_from(g, 0, method="certified")
    assert got[n - 1] == sum(Fraction(1, c) for c in counts)


def test_converse_counterexamples():
    # no direct collaboration yet a finite A-number: 1/#(A,C) is undefined
    chain = build_graph([("A", "B", 1), ("B", "C", 1)])
    assert collaboration_count(chain, 0, 2) == 0
    assert a_numbers_from(chain, 0)[2] == 2
    # two joint papers: A-number 1 exceeds 1/#(A,B) = 1/2
    pair = build_graph([("A", "B", 2)])
    assert a_numbers_from(pair, 0)[1] == 1 > Fraction(1, collaboration_count(pair, 0, 1))
