# %% [markdown]
# # Distances on a three-author network
#
# A wrote two papers with B, and B wrote four with C. A and C never
# collaborated directly.

# %%
from fractions import Fraction

from collabdist import (
    a_numbers_from,
    build_graph,
    collaboration_count,
    describe,
    geodesic,
    weighted_a_numbers_from,
)

g = build_graph([("A", "B", 2), ("B", "C", 4)])
A, B, C = (g.node_id(x) for x in "ABC")
print(g)
print("papers(A, B) =", collaboration_count(g, A, B))
print("papers(A, C) =", collaboration_count(g, A, C))

# %% [markdown]
# The classic number counts hops. The weighted number charges 1/count per
# edge, so each extra joint paper pulls two authors closer.

# %%
hops = a_numbers_from(g, A)
weighted = weighted_a_numbers_from(g, A)
for v in range(g.n_nodes):
    print(f"{g.labels[v]}: hops={hops[v]}  weighted={describe(weighted[v])}")

# %% [markdown]
# Going through B is the only route from A to C, so the triangle inequality
# is tight in both metrics.

# %%
assert hops[C] == hops[B] + 1
assert weighted[C] == Fraction(1, 2) + Fraction(1, 4)

path = geodesic(g, A, C, "weighted")
print(" -> ".join(path.labels(g)), "edge lengths", [str(w) for w in path.edge_weights])
