"""Random graph generators and brute-force oracles shared by the tests.

The oracles here deliberately avoid the package's BFS and Dijkstra code:
components come from boolean transitive closure, distances from
Floyd-Warshall over exact fractions.
"""

from fractions import Fraction

import numpy as np

from collabdist import build_graph


def random_connected_graph(rng, n_nodes, max_count=5, extra_p=0.3):
    """Random spanning tree plus random extra edges, labels ``n0..``."""
    edges = []
    for i in range(1, n_nodes):
        j = int(rng.integers(0, i))
        edges.append((i, j))
    for i in range(n_nodes):
        for j in range(i + 1, n_nodes):
            if rng.random() < extra_p:
                edges.append((i, j))
    perm = rng.permutation(n_nodes)
    triples = [(f"n{perm[i]}", f"n{perm[j]}", int(rng.integers(1, max_count + 1))) for i, j in edges]
    order = rng.permutation(len(triples))
    return build_graph([triples[k] for k in order])


def random_graph(rng, n_nodes, p=0.2, max_count=5):
    """Erdos-Renyi style graph; may be disconnected. Isolated nodes are dropped."""
    triples = [
        (f"v{i}", f"v{j}", int(rng.integers(1, max_count + 1)))
        for i in range(n_nodes)
        for j in range(i + 1, n_nodes)
        if rng.random() < p
    ]
    return build_graph(triples)


def count_matrix(g):
    m = np.zeros((g.n_nodes, g.n_nodes), dtype=np.int64)
    for a, b, c in g.edges():
        m[a, b] = m[b, a] = c
    return m


def closure_reachability(g):
    """Boolean transitive closure (Warshall); reach[i, j] iff j reachable from i."""
    reach = count_matrix(g) > 0
    np.fill_diagonal(reach, True)
    for k in range(g.n_nodes):
        reach |= np.outer(reach[:, k], reach[k, :])
    return reach


def floyd_warshall(g, weighted):
    """All-pairs exact distances; ``None`` for unreachable pairs."""
    n = g.n_nodes
    d = [[None] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = Fraction(0)
    for a, b, c in g.edges():
        w = Fraction(1, c) if weighted else Fraction(1)
        d[a][b] = d[b][a] = w
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik is None:
                continue
            di = d[i]
            for j in range(n):
                if dk[j] is not None and (di[j] is None or dik + dk[j] < di[j]):
                    di[j] = dik + dk[j]
    return d
