"""Unweighted and collaboration-weighted geodesic distances.

The unweighted A-number of B is the least number of edges on a path from A
to B. The weighted A'-number gives each edge the length ``1/count`` where
``count`` is the number of joint publications of its endpoints, so frequent
collaborators sit close together. Weighted values are exact
:class:`fractions.Fraction` instances.

Distances between nodes in different components are the :data:`UNREACHABLE`
sentinel rather than an exception.
"""

from __future__ import annotations

import enum
import heapq
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra as _scipy_dijkstra

from .errors import ArithmeticOverflow, LimitExceeded
from .graph import CollaborationGraph

__all__ = [
    "INT_BITS",
    "Metric",
    "UNREACHABLE",
    "GeodesicPath",
    "a_number",
    "a_numbers_from",
    "distance_distribution",
    "enumerate_path_lengths",
    "geodesic",
    "weighted_a_number",
    "weighted_a_numbers_from",
]

# Signed width of numerator and denominator of any reported weighted distance.
INT_BITS = 128

# Below this edge count the exact rational Dijkstra is used even in "auto" mode.
CERTIFIED_MIN_EDGES = 2_000

_UNIT_ROUNDOFF = 2.0**-53


class Metric(str, enum.Enum):
    UNWEIGHTED = "unweighted"
    WEIGHTED = "weighted"

    @classmethod
    def coerce(cls, value: "Metric | str | bool") -> "Metric":
        """Accept a Metric, ``"u"``/``"w"``, the full names, or a ``weighted`` bool."""
        if isinstance(value, cls):
            return value
        if isinstance(value, bool):
            return cls.WEIGHTED if value else cls.UNWEIGHTED
        text = str(value).strip().lower()
        if text in ("u", "unweighted"):
            return cls.UNWEIGHTED
        if text in ("w", "weighted"):
            return cls.WEIGHTED
        raise ValueError(f"unknown metric {value!r}; expected 'u' or 'w'")

    @property
    def short(self) -> str:
        return self.value[0]


class _Unreachable:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()

Distance = Union[int, Fraction, _Unreachable]


@dataclass(frozen=True)
class GeodesicPath:
    """A minimum-length path ``vertices[0] .. vertices[-1]``.

    ``edge_weights[i]`` is the length of the edge between ``vertices[i]``
    and ``vertices[i + 1]``; ``total`` is their sum.
    """

    vertices: tuple[int, ...]
    edge_weights: tuple[Fraction, ...]
    total: int | Fraction

    @property
    def n_edges(self) -> int:
        return len(self.edge_weights)

    def labels(self, g: CollaborationGraph) -> list[str]:
        return [g.labels[v] for v in self.vertices]


def _check_width(q: Fraction) -> Fraction:
    limit = INT_BITS - 1
    if q.numerator.bit_length() > limit or q.denominator.bit_length() > limit:
        raise ArithmeticOverflow(
            f"distance {q.numerator}/{q.denominator} exceeds {INT_BITS}-bit rational range"
        )
    return q


# ----------------------------------------------------------------------
# single-source kernels, returning dense lists with None for unreachable


def _bfs(g: CollaborationGraph, source: int) -> list[int | None]:
    indptr, indices, _ = g.adjacency
    dist: list[int | None] = [None] * g.n_nodes
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for k in range(indptr[x], indptr[x + 1]):
            y = indices[k]
            if dist[y] is None:
                dist[y] = dx
                queue.append(y)
    return dist


def _exact_dijkstra(
    g: CollaborationGraph, source: int, target: int | None = None
) -> list[Fraction | None]:
    indptr, indices, counts = g.adjacency
    unit: dict[int, Fraction] = {}
    best: list[Fraction | None] = [None] * g.n_nodes
    done = bytearray(g.n_nodes)
    best[source] = Fraction(0)
    heap = [(best[source], source)]
    while heap:
        d, x = heapq.heappop(heap)
        if done[x]:
            continue
        done[x] = 1
        if x == target:
            break
        for k in range(indptr[x], indptr[x + 1]):
            y = indices[k]
            if done[y]:
                continue
            c = counts[k]
            w = unit.get(c)
            if w is None:
                w = unit[c] = Fraction(1, c)
            nd = d + w
            if best[y] is None or nd < best[y]:
                best[y] = nd
                heapq.heappush(heap, (nd, y))
    if target is not None:
        return [best[v] if done[v] else None for v in range(g.n_nodes)]
    return best


def _certified_dijkstra(g: CollaborationGraph, source: int) -> list[Fraction | None] | None:
    """Float Dijkstra followed by exact re-relaxation over near-tight edges.

    Float distances carry a relative error of at most ``n * u`` per node
    (``u`` the unit roundoff). Every edge lying on an exact geodesic is
    therefore tight to within ``tol`` in float arithmetic, and every
    candidate predecessor has strictly smaller float distance than its
    successor as long as ``tol`` stays well below the smallest edge weight.
    Processing candidate edges in float-distance order and taking the exact
    rational minimum yields exact distances. Returns ``None`` when the
    tolerance argument does not hold, so callers fall back to exact Dijkstra.
    """
    n = g.n_nodes
    if g.n_edges == 0:
        return _exact_dijkstra(g, source)
    weights = 1.0 / g.counts.astype(np.float64)
    mat = csr_matrix((weights, g.indices, g.indptr), shape=(n, n))
    dist = _scipy_dijkstra(mat, directed=True, indices=source)

    reach = np.isfinite(dist)
    dmax = float(dist[reach].max())
    tol = 8.0 * n * _UNIT_ROUNDOFF * (dmax + 1.0)
    if 4.0 * tol >= 1.0 / float(g.counts.max()):
        return None

    rows = np.repeat(np.arange(n), np.diff(g.indptr))
    cols = g.indices
    tight = reach[rows] & (dist[rows] + weights <= dist[cols] + tol)
    tight_rows, tight_cols, tight_counts = rows[tight], cols[tight], g.counts[tight]
    order = np.argsort(dist[tight_cols], kind="stable")

    exact: list[Fraction | None] = [None] * n
    exact[source] = Fraction(0)
    unit: dict[int, Fraction] = {}
    for x, y, c in zip(
        tight_rows[order].tolist(), tight_cols[order].tolist(), tight_counts[order].tolist()
    ):
        dx = exact[x]
        if dx is None:  # cannot happen when the tolerance argument holds
            return None
        w = unit.get(c)
        if w is None:
            w = unit[c] = Fraction(1, c)
        nd = dx + w
        if exact[y] is None or nd < exact[y]:
            exact[y] = nd
    if any(exact[v] is None for v in np.flatnonzero(reach).tolist()):
        return None
    return exact


def _weighted_from(g: CollaborationGraph, source: int, method: str) -> list[Fraction | None]:
    if method not in ("auto", "exact", "certified"):
        raise ValueError(f"unknown method {method!r}")
    dist = None
    if method == "certified" or (method == "auto" and g.n_edges >= CERTIFIED_MIN_EDGES):
        dist = _certified_dijkstra(g, source)
    if dist is None:
        dist = _exact_dijkstra(g, source)
    for q in dist:
        if q is not None:
            _check_width(q)
    return dist


def _distances(g: CollaborationGraph, source: int, metric: Metric) -> list:
    if metric is Metric.WEIGHTED:
        return _weighted_from(g, source, "auto")
    return _bfs(g, source)


def _as_distance(value) -> Distance:
    return UNREACHABLE if value is None else value


# ----------------------------------------------------------------------
# public operations


def a_number(g: CollaborationGraph, source: int, target: int) -> int | _Unreachable:
    """Least number of edges on a path from ``source`` to ``target``."""
    source, target = g.check_node(source), g.check_node(target)
    if source == target:
        return 0
    return _as_distance(_bfs(g, source)[target])


def weighted_a_number(g: CollaborationGraph, source: int, target: int) -> Fraction | _Unreachable:
    """Least total of ``1/count`` over the edges of a path from ``source`` to ``target``."""
    source, target = g.check_node(source), g.check_node(target)
    if source == target:
        return Fraction(0)
    d = _exact_dijkstra(g, source, target)[target]
    return UNREACHABLE if d is None else _check_width(d)


def a_numbers_from(g: CollaborationGraph, source: int) -> dict[int, int | _Unreachable]:
    source = g.check_node(source)
    return {v: _as_distance(d) for v, d in enumerate(_bfs(g, source))}


def weighted_a_numbers_from(
    g: CollaborationGraph, source: int, *, method: str = "auto"
) -> dict[int, Fraction | _Unreachable]:
    """Weighted distances from ``source`` to every node.

    ``method`` selects the kernel: ``"exact"`` runs Dijkstra directly on
    fractions, ``"certified"`` runs a float Dijkstra and recovers the exact
    values from the near-tight edges (falling back to ``"exact"`` when the
    float error bound is too loose), ``"auto"`` picks by graph size.
    """
    source = g.check_node(source)
    return {v: _as_distance(d) for v, d in enumerate(_weighted_from(g, source, method))}


def _edge_weight(count: int, metric: Metric) -> Fraction:
    return Fraction(1, count) if metric is Metric.WEIGHTED else Fraction(1)


def geodesic(
    g: CollaborationGraph, source: int, target: int, mode: Metric | str = Metric.UNWEIGHTED
) -> GeodesicPath | _Unreachable:
    """Shortest path from ``source`` to ``target``.

    Geodesics need not be unique; the lexicographically smallest vertex
    sequence is returned. It is built greedily: from the current vertex,
    step to the smallest neighbour whose edge lies on some geodesic.
    """
    metric = Metric.coerce(mode)
    source, target = g.check_node(source), g.check_node(target)
    from_source = _distances(g, source, metric)
    total = from_source[target]
    if total is None:
        return UNREACHABLE
    to_target = _distances(g, target, metric)
    indptr, indices, counts = g.adjacency

    vertices = [source]
    weights: list[Fraction] = []
    x = source
    while x != target:
        for k in range(indptr[x], indptr[x + 1]):
            y = indices[k]
            w = _edge_weight(counts[k], metric)
            if from_source[x] + w + to_target[y] == total:
                break
        else:  # pragma: no cover - distances are consistent by construction
            raise AssertionError("no geodesic continuation found")
        vertices.append(y)
        weights.append(w)
        x = y
    if metric is Metric.UNWEIGHTED:
        total = int(total)
    return GeodesicPath(tuple(vertices), tuple(weights), total)


def enumerate_path_lengths(
    g: CollaborationGraph,
    source: int,
    target: int,
    mode: Metric | str = Metric.UNWEIGHTED,
    max_vertices: int | None = None,
    *,
    limit: int = 100_000,
) -> list[tuple[tuple[int, ...], int | Fraction]]:
    """Every simple path from ``source`` to ``target`` with its exact length.

    Brute-force reference for the distance functions: the minimum of the
    returned lengths is the distance whenever ``max_vertices >= n_nodes``.
    Paths are produced depth-first with neighbours in ascending id order.
    Raises :class:`LimitExceeded` once more than ``limit`` paths are found.
    """
    metric = Metric.coerce(mode)
    source, target = g.check_node(source), g.check_node(target)
    if max_vertices is None:
        max_vertices = g.n_nodes
    if max_vertices < 1:
        return []
    if source == target:
        return [((source,), 0 if metric is Metric.UNWEIGHTED else Fraction(0))]

    results = []
    path = [source]
    on_path = {source}

    def extend(x: int, length) -> None:
        nbrs, cnts = g.neighbors(x)
        for y, c in zip(nbrs.tolist(), cnts.tolist()):
            if y in on_path:
                continue
            step = 1 if metric is Metric.UNWEIGHTED else Fraction(1, c)
            if y == target:
                if len(path) + 1 > max_vertices:
                    continue
                if len(results) >= limit:
                    raise LimitExceeded(f"more than {limit} simple paths")
                results.append((tuple(path) + (y,), length + step))
            elif len(path) + 1 < max_vertices:
                path.append(y)
                on_path.add(y)
                extend(y, length + step)
                on_path.discard(y)
                path.pop()

    extend(source, 0 if metric is Metric.UNWEIGHTED else Fraction(0))
    return results


def distance_distribution(
    g: CollaborationGraph, source: int, mode: Metric | str = Metric.UNWEIGHTED
) -> dict[int | Fraction, int]:
    """Histogram ``distance -> number of nodes`` over the component of ``source``."""
    metric = Metric.coerce(mode)
    source = g.check_node(source)
    hist = Counter(d for d in _distances(g, source, metric) if d is not None)
    return dict(sorted(hist.items()))
