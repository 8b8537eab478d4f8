"""Simple undirected graph engine.

Graphs are immutable after construction: an ordered tuple of distinct hashable
vertex labels plus a symmetric boolean adjacency matrix with zero diagonal.
Matrix builders return dense float numpy arrays that are symmetric by
construction.  Vertex connectivity runs unit-capacity max-flow on the
vertex-split digraph (Menger), with an exhaustive-removal variant kept as a
small-graph oracle.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Hashable, Iterable, Sequence

import numpy as np

from .eigen import DEFAULT_GROUP_TOL, Spectrum, group_eigenvalues, symmetric_eigenvalues

MATRIX_KINDS = ("adjacency", "laplacian", "signless", "normalized")


class LabeledGraph:
    """Finite simple undirected graph with distinct, ordered vertex labels."""

    __slots__ = ("_labels", "_index", "_adj")

    def __init__(self, labels: Sequence[Hashable], edges: Iterable[tuple[Hashable, Hashable]] = ()):
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("vertex labels must be distinct")
        n = len(labels)
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            i, j = index[u], index[v]
            if i == j:
                raise ValueError(f"self-loop at {u!r}")
            adj[i, j] = adj[j, i] = True
        adj.setflags(write=False)
        self._labels = labels
        self._index = index
        self._adj = adj

    @classmethod
    def from_adjacency(cls, labels: Sequence[Hashable], adj: np.ndarray) -> "LabeledGraph":
        g = cls(labels)
        adj = np.asarray(adj, dtype=bool).copy()
        if adj.shape != (g.order, g.order):
            raise ValueError("adjacency shape does not match label count")
        if not np.array_equal(adj, adj.T) or np.any(np.diag(adj)):
            raise ValueError("adjacency must be symmetric with zero diagonal")
        adj.setflags(write=False)
        g._adj = adj
        return g

    @property
    def labels(self) -> tuple:
        return self._labels

    @property
    def order(self) -> int:
        return len(self._labels)

    @property
    def size(self) -> int:
        return int(np.count_nonzero(self._adj)) // 2

    def adjacency(self) -> np.ndarray:
        """Read-only boolean adjacency matrix in label order."""
        return self._adj

    def index_of(self, label) -> int:
        return self._index[label]

    def has_edge(self, u, v) -> bool:
        return bool(self._adj[self._index[u], self._index[v]])

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1).astype(int)

    def degree(self, label) -> int:
        return int(self._adj[self._index[label]].sum())

    def neighbors(self, label) -> tuple:
        i = self._index[label]
        return tuple(self._labels[j] for j in np.flatnonzero(self._adj[i]))

    def edges(self) -> list[tuple]:
        ii, jj = np.nonzero(np.triu(self._adj))
        return [(self._labels[i], self._labels[j]) for i, j in zip(ii, jj)]

    def edge_label_set(self) -> frozenset[frozenset]:
        return frozenset(frozenset(e) for e in self.edges())

    def induced(self, keep: Iterable) -> "LabeledGraph":
        """Induced subgraph on the given labels, preserving this graph's order."""
        keep_set = set(keep)
        idx = [i for i, lab in enumerate(self._labels) if lab in keep_set]
        labels = tuple(self._labels[i] for i in idx)
        return LabeledGraph.from_adjacency(labels, self._adj[np.ix_(idx, idx)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return set(self._labels) == set(other._labels) and self.edge_label_set() == other.edge_label_set()

    __hash__ = None  # mutable-looking equality; graphs are not dict keys

    def __repr__(self) -> str:
        return f"LabeledGraph(order={self.order}, size={self.size})"


def null_graph(labels: Sequence[Hashable]) -> LabeledGraph:
    return LabeledGraph(labels)


def complete_graph(labels: Sequence[Hashable]) -> LabeledGraph:
    labels = tuple(labels)
    return LabeledGraph(labels, itertools.combinations(labels, 2))


def complement(g: LabeledGraph) -> LabeledGraph:
    adj = ~g.adjacency() & ~np.eye(g.order, dtype=bool)
    return LabeledGraph.from_adjacency(g.labels, adj)


def join(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
    """Disjoint union of g1 and g2 plus every edge between the two sides."""
    n1, n2 = g1.order, g2.order
    adj = np.zeros((n1 + n2, n1 + n2), dtype=bool)
    adj[:n1, :n1] = g1.adjacency()
    adj[n1:, n1:] = g2.adjacency()
    adj[:n1, n1:] = True
    adj[n1:, :n1] = True
    return LabeledGraph.from_adjacency(g1.labels + g2.labels, adj)


def generalized_join(host: LabeledGraph, factors: Sequence[LabeledGraph]) -> LabeledGraph:
    """Replace each host vertex by a factor graph; host edges become complete bipartite links."""
    if len(factors) != host.order:
        raise ValueError(f"host has {host.order} vertices but {len(factors)} factors given")
    labels: list = []
    offsets: list[int] = []
    for f in factors:
        offsets.append(len(labels))
        labels.extend(f.labels)
    total = len(labels)
    adj = np.zeros((total, total), dtype=bool)
    for f, off in zip(factors, offsets):
        adj[off : off + f.order, off : off + f.order] = f.adjacency()
    host_adj = host.adjacency()
    for i in range(host.order):
        for j in range(i + 1, host.order):
            if host_adj[i, j]:
                oi, oj = offsets[i], offsets[j]
                adj[oi : oi + factors[i].order, oj : oj + factors[j].order] = True
                adj[oj : oj + factors[j].order, oi : oi + factors[i].order] = True
    return LabeledGraph.from_adjacency(tuple(labels), adj)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def adjacency_matrix(g: LabeledGraph) -> np.ndarray:
    return g.adjacency().astype(float)


def laplacian_matrix(g: LabeledGraph) -> np.ndarray:
    a = adjacency_matrix(g)
    return np.diag(a.sum(axis=1)) - a


def signless_laplacian_matrix(g: LabeledGraph) -> np.ndarray:
    a = adjacency_matrix(g)
    return np.diag(a.sum(axis=1)) + a


def normalized_laplacian_matrix(g: LabeledGraph) -> np.ndarray:
    """Symmetric normalized Laplacian D^{-1/2} L D^{-1/2}.

    Isolated vertices contribute a zero row and column (so eigenvalue 0);
    non-isolated vertices carry diagonal entry 1.
    """
    a = adjacency_matrix(g)
    deg = a.sum(axis=1)
    scale = np.where(deg > 0, 1.0 / np.sqrt(np.where(deg > 0, deg, 1.0)), 0.0)
    lap = np.diag(deg) - a
    return scale[:, None] * lap * scale[None, :]


def matrix_for(g: LabeledGraph, kind: str) -> np.ndarray:
    if kind == "adjacency":
        return adjacency_matrix(g)
    if kind == "laplacian":
        return laplacian_matrix(g)
    if kind == "signless":
        return signless_laplacian_matrix(g)
    if kind == "normalized":
        return normalized_laplacian_matrix(g)
    raise ValueError(f"unknown matrix kind {kind!r}; expected one of {MATRIX_KINDS}")


def graph_spectrum(g: LabeledGraph, kind: str, tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    return symmetric_eigenvalues(matrix_for(g, kind), tol=tol)


def join_laplacian_spectrum(s1: Spectrum, n1: int, s2: Spectrum, n2: int, tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    """Laplacian spectrum of a join from the two parts' Laplacian spectra.

    The join of graphs of orders n1, n2 has Laplacian eigenvalues
    {0, n1+n2} plus each part's spectrum with one 0 removed and the other
    part's order added.  Raises ValueError when an input spectrum lacks
    eigenvalue 0 (then it is not a Laplacian spectrum).
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("both sides of the join must be nonempty")

    def strip_zero(s: Spectrum, order: int) -> list[float]:
        vals = sorted(s.values().tolist())
        if len(vals) != order:
            raise ValueError(f"spectrum has {len(vals)} eigenvalues for a graph of order {order}")
        if not vals or abs(vals[0]) > max(s.tol, tol):
            raise ValueError("Laplacian spectrum must contain eigenvalue 0")
        return vals[1:]

    rest1 = strip_zero(s1, n1)
    rest2 = strip_zero(s2, n2)
    merged = [0.0, float(n1 + n2)] + [v + n2 for v in rest1] + [v + n1 for v in rest2]
    return group_eigenvalues(merged, tol=tol)


# ---------------------------------------------------------------------------
# traversal and connectivity
# ---------------------------------------------------------------------------

def components(g: LabeledGraph) -> tuple[tuple, ...]:
    """Connected components as tuples of labels, in label order."""
    n = g.order
    adj = g.adjacency()
    seen = np.zeros(n, dtype=bool)
    out: list[tuple] = []
    for start in range(n):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        comp = [start]
        while queue:
            u = queue.popleft()
            for v in np.flatnonzero(adj[u]):
                if not seen[v]:
                    seen[v] = True
                    comp.append(int(v))
                    queue.append(int(v))
        out.append(tuple(g.labels[i] for i in sorted(comp)))
    return tuple(out)


def is_connected(g: LabeledGraph) -> bool:
    """True for the empty graph, single vertices, and single-component graphs."""
    return g.order <= 1 or len(components(g)) == 1


def is_complete(g: LabeledGraph) -> bool:
    return g.size == g.order * (g.order - 1) // 2


def _max_vertex_disjoint_paths(adj: np.ndarray, s: int, t: int, cutoff: int) -> int:
    """Internally vertex-disjoint s-t paths via unit-capacity flow, capped at cutoff.

    Vertices other than s, t are split in-node/out-node with a unit arc, so a
    unit of flow uses an interior vertex at most once.
    """
    n = adj.shape[0]
    cap: dict[int, dict[int, int]] = {}

    def arc(u: int, v: int) -> None:
        cap.setdefault(u, {})[v] = cap.setdefault(u, {}).get(v, 0) + 1
        cap.setdefault(v, {}).setdefault(u, 0)

    for v in range(n):
        if v != s and v != t:
            arc(2 * v, 2 * v + 1)
    for u, v in zip(*np.nonzero(np.triu(adj))):
        arc(2 * int(u) + 1, 2 * int(v))
        arc(2 * int(v) + 1, 2 * int(u))
    src, dst = 2 * s + 1, 2 * t
    flow = 0
    while flow < cutoff:
        parent: dict[int, int | None] = {src: None}
        queue = deque([src])
        while queue and dst not in parent:
            u = queue.popleft()
            for v, c in cap.get(u, {}).items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if dst not in parent:
            break
        v = dst
        while parent[v] is not None:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] += 1
            v = u
        flow += 1
    return flow


def vertex_connectivity(g: LabeledGraph) -> int:
    """Minimum number of vertices whose removal disconnects the graph.

    0 for disconnected or trivial graphs, order-1 for complete graphs, and
    otherwise the Menger minimum over non-adjacent pairs of the maximum number
    of internally vertex-disjoint paths.
    """
    n = g.order
    if n <= 1 or not is_connected(g):
        return 0
    if is_complete(g):
        return n - 1
    adj = g.adjacency()
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if adj[s, t]:
                continue
            best = min(best, _max_vertex_disjoint_paths(adj, s, t, cutoff=best))
    return best


def vertex_connectivity_exhaustive(g: LabeledGraph) -> int:
    """Exhaustive-removal vertex connectivity; only sensible for small graphs."""
    n = g.order
    if n <= 1 or not is_connected(g):
        return 0
    if is_complete(g):
        return n - 1
    for size in range(1, n - 1):
        for subset in itertools.combinations(range(n), size):
            keep = [g.labels[i] for i in range(n) if i not in subset]
            if not is_connected(g.induced(keep)):
                return size
    return n - 1


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def to_dot(g: LabeledGraph, name: str = "G", label=str, fillcolor=None) -> str:
    """Graphviz DOT text; fillcolor, when given, maps a vertex label to a color."""
    lines = [f"graph {name} {{"]
    for i, lab in enumerate(g.labels):
        attrs = f'label="{label(lab)}"'
        if fillcolor is not None:
            attrs += f', style=filled, fillcolor="{fillcolor(lab)}"'
        lines.append(f"  v{i} [{attrs}];")
    adj = g.adjacency()
    for i, j in zip(*np.nonzero(np.triu(adj))):
        lines.append(f"  v{int(i)} -- v{int(j)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g: LabeledGraph, label=str) -> str:
    """Plain-text edge list, one 'u v' pair per line; isolated graphs give headers only."""
    lines = [f"# vertices: {g.order}  edges: {g.size}"]
    for lab in g.labels:
        lines.append(f"# vertex {label(lab)}")
    for u, v in g.edges():
        lines.append(f"{label(u)} {label(v)}")
    return "\n".join(lines) + "\n"
