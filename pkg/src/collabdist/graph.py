"""Immutable undirected collaboration graph.

Nodes are authors, interned to dense integer ids in order of first appearance.
Each undirected edge carries the number of joint publications of its two
endpoints. Storage is a symmetric CSR layout (``indptr``, ``indices``,
``counts``) with every neighbour list sorted by node id.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from numbers import Integral
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import NonPositiveCount, SelfEdge, UnknownNode

__all__ = [
    "CollaborationGraph",
    "build_graph",
    "collaboration_count",
    "components",
    "connected_component",
    "clean_label",
]


def clean_label(label: str) -> str:
    """Trim surrounding whitespace; labels are otherwise compared byte-exact."""
    if not isinstance(label, str):
        raise TypeError(f"author label must be str, got {type(label).__name__}")
    label = label.strip()
    if not label:
        raise ValueError("author label is empty")
    return label


def _check_count(count) -> int:
    if type(count) is int and count > 0:
        return count
    if isinstance(count, bool) or not isinstance(count, Integral):
        raise NonPositiveCount(f"collaboration count must be an integer, got {count!r}")
    if count <= 0:
        raise NonPositiveCount(f"collaboration count must be positive, got {count}")
    return int(count)


class CollaborationGraph:
    """Undirected graph whose edges carry joint-publication counts.

    Build instances with :func:`build_graph` or :meth:`from_arrays`. The
    object is frozen after construction and safe to share across threads.
    """

    def __init__(
        self,
        labels: Sequence[str],
        indptr: np.ndarray,
        indices: np.ndarray,
        counts: np.ndarray,
    ) -> None:
        for arr in (indptr, indices, counts):
            arr.flags.writeable = False
        set_ = object.__setattr__
        set_(self, "labels", tuple(labels))
        set_(self, "indptr", indptr)
        set_(self, "indices", indices)
        set_(self, "counts", counts)
        set_(self, "_ids", {label: i for i, label in enumerate(self.labels)})

    def __setattr__(self, name, value):
        raise AttributeError("CollaborationGraph is immutable")

    @classmethod
    def from_arrays(
        cls,
        n_nodes: int,
        u: Iterable[int],
        v: Iterable[int],
        counts: Iterable[int],
        labels: Sequence[str] | None = None,
    ) -> "CollaborationGraph":
        """Build from parallel endpoint/count arrays of node ids.

        Duplicate unordered pairs are merged by summing their counts.
        """
        u = np.asarray(u, dtype=np.int64).ravel()
        v = np.asarray(v, dtype=np.int64).ravel()
        c = np.asarray(counts, dtype=np.int64).ravel()
        if not (len(u) == len(v) == len(c)):
            raise ValueError("u, v and counts must have equal length")
        if labels is None:
            labels = [str(i) for i in range(n_nodes)]
        if len(labels) != n_nodes:
            raise ValueError("labels must have one entry per node")
        if len(u) and (min(u.min(), v.min()) < 0 or max(u.max(), v.max()) >= n_nodes):
            raise UnknownNode("edge endpoint outside 0..n_nodes-1")
        if np.any(u == v):
            i = int(np.flatnonzero(u == v)[0])
            raise SelfEdge(f"self-edge on node {int(u[i])}")
        if np.any(c <= 0):
            i = int(np.flatnonzero(c <= 0)[0])
            raise NonPositiveCount(f"collaboration count must be positive, got {int(c[i])}")

        lo = np.minimum(u, v)
        hi = np.maximum(u, v)
        key = lo * max(n_nodes, 1) + hi
        order = np.argsort(key, kind="stable")
        key = key[order]
        if len(key):
            starts = np.flatnonzero(np.r_[True, key[1:] != key[:-1]])
            c = np.add.reduceat(c[order], starts)
            lo, hi = lo[order][starts], hi[order][starts]
        else:
            lo = hi = c = np.empty(0, dtype=np.int64)

        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        cnt = np.concatenate([c, c])
        order = np.lexsort((dst, src))
        indptr = np.zeros(n_nodes + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n_nodes), out=indptr[1:])
        return cls(labels, indptr, dst[order], cnt[order])

    # ------------------------------------------------------------------
    @property
    def n_nodes(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return len(self.indices) // 2

    def __len__(self) -> int:
        return self.n_nodes

    def __repr__(self) -> str:
        return f"CollaborationGraph(n_nodes={self.n_nodes}, n_edges={self.n_edges})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, CollaborationGraph):
            return NotImplemented
        return (
            self.labels == other.labels
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.counts, other.counts)
        )

    __hash__ = None

    def check_node(self, node: int) -> int:
        if isinstance(node, bool) or not isinstance(node, Integral):
            raise UnknownNode(f"node id must be an integer, got {node!r}")
        if not 0 <= node < self.n_nodes:
            raise UnknownNode(f"node id {node} out of range 0..{self.n_nodes - 1}")
        return int(node)

    def node_id(self, label: str) -> int:
        try:
            return self._ids[clean_label(label)]
        except (KeyError, ValueError):
            raise UnknownNode(f"unknown author {label!r}") from None

    def label(self, node: int) -> str:
        return self.labels[self.check_node(node)]

    def neighbors(self, node: int) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(neighbour_ids, counts)`` for ``node``, sorted by id."""
        node = self.check_node(node)
        lo, hi = self.indptr[node], self.indptr[node + 1]
        return self.indices[lo:hi], self.counts[lo:hi]

    def degree(self, node: int) -> int:
        node = self.check_node(node)
        return int(self.indptr[node + 1] - self.indptr[node])

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield each undirected edge once as ``(a, b, count)`` with ``a < b``."""
        indptr, indices, counts = self.adjacency
        for a in range(self.n_nodes):
            for k in range(indptr[a], indptr[a + 1]):
                b = indices[k]
                if a < b:
                    yield a, b, counts[k]

    @cached_property
    def adjacency(self) -> tuple[list[int], list[int], list[int]]:
        """CSR arrays as plain lists; faster than numpy for scalar loops."""
        return self.indptr.tolist(), self.indices.tolist(), self.counts.tolist()


def build_graph(edges: Iterable[tuple[str, str, int]]) -> CollaborationGraph:
    """Intern author labels and merge ``(author_a, author_b, count)`` triples."""
    ids: dict[str, int] = {}
    labels: list[str] = []
    us: list[int] = []
    vs: list[int] = []
    cs: list[int] = []
    for a, b, count in edges:
        a, b = clean_label(a), clean_label(b)
        if a == b:
            raise SelfEdge(f"self-edge on author {a!r}")
        cs.append(_check_count(count))
        for label, out in ((a, us), (b, vs)):
            node = ids.get(label)
            if node is None:
                node = ids[label] = len(labels)
                labels.append(label)
            out.append(node)
    return CollaborationGraph.from_arrays(len(labels), us, vs, cs, labels)


def collaboration_count(g: CollaborationGraph, a: int, b: int) -> int:
    """Number of joint publications of ``a`` and ``b``; 0 when not adjacent."""
    a, b = g.check_node(a), g.check_node(b)
    if a == b:
        return 0
    nbrs, counts = g.neighbors(a)
    k = int(np.searchsorted(nbrs, b))
    if k < len(nbrs) and nbrs[k] == b:
        return int(counts[k])
    return 0


def _bfs_component(indptr: list[int], indices: list[int], start: int, seen: bytearray) -> list[int]:
    seen[start] = 1
    found = [start]
    queue = deque(found)
    while queue:
        x = queue.popleft()
        for k in range(indptr[x], indptr[x + 1]):
            y = indices[k]
            if not seen[y]:
                seen[y] = 1
                found.append(y)
                queue.append(y)
    return found


def connected_component(g: CollaborationGraph, a: int) -> frozenset[int]:
    """All nodes reachable from ``a``, including ``a`` itself."""
    a = g.check_node(a)
    indptr, indices, _ = g.adjacency
    return frozenset(_bfs_component(indptr, indices, a, bytearray(g.n_nodes)))


def components(g: CollaborationGraph) -> list[frozenset[int]]:
    """Partition of the node set into connected components, ordered by smallest member."""
    indptr, indices, _ = g.adjacency
    seen = bytearray(g.n_nodes)
    cells = []
    for start in range(g.n_nodes):
        if not seen[start]:
            cells.append(frozenset(_bfs_component(indptr, indices, start, seen)))
    return cells
