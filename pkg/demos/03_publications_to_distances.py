# %% [markdown]
# # From publication records to a distance histogram
#
# Publication lists are expanded into pairwise joint-paper counts (every
# pair of co-authors on a paper gets one), then distances are measured from
# a chosen author.

# %%
import json

import numpy as np

from collabdist import (
    build_graph,
    components,
    distance_distribution,
    expand_publications,
    format_decimal,
    parse_publications_jsonl,
)

rng = np.random.default_rng(1)
names = [f"author{i:03d}" for i in range(300)]
lines = []
for i in range(1500):
    team = rng.choice(len(names), size=int(rng.integers(1, 5)), replace=False)
    lines.append(json.dumps({"id": f"p{i}", "authors": [names[j] for j in team]}))

pubs = parse_publications_jsonl("\n".join(lines))
edges = expand_publications(pubs)
g = build_graph(edges)
print(f"{len(pubs)} publications -> {g.n_nodes} authors, {g.n_edges} collaborations")

# %%
sizes = sorted((len(c) for c in components(g)), reverse=True)
print("largest components:", sizes[:5])

# %% [markdown]
# Hop-distance histogram from one author of the giant component.

# %%
source = max(range(g.n_nodes), key=g.degree)
hist = distance_distribution(g, source)
for d, n in hist.items():
    print(f"{d:>2} {'#' * max(1, n // 5)} {n}")
mean = sum(d * n for d, n in hist.items()) / sum(hist.values())
print("mean hop distance", round(mean, 3))

# %% [markdown]
# Weighted distances take exact fractional values; bucket them by decimal.

# %%
whist = distance_distribution(g, source, "w")
print(len(whist), "distinct weighted distances; smallest non-zero:",
      format_decimal(list(whist)[1]))
