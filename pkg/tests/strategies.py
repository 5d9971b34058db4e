from hypothesis import strategies as st

from collabdist import build_graph


@st.composite
def connected_graphs(draw, min_nodes=1, max_nodes=12, max_count=5):
    """Connected collaboration graphs: a random spanning tree plus extra edges."""
    n = draw(st.integers(min_nodes, max_nodes))
    count = st.integers(1, max_count)
    edges = [(f"a{draw(st.integers(0, i - 1))}", f"a{i}", draw(count)) for i in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), count), max_size=2 * n))
    edges += [(f"a{i}", f"a{j}", c) for i, j, c in extra if i != j]
    if n == 1:
        # a lone author has no edges; build from arrays instead
        from collabdist import CollaborationGraph

        return CollaborationGraph.from_arrays(1, [], [], [], ["a0"])
    return build_graph(draw(st.permutations(edges)))
