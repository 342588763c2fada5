"""Immutable simple graphs and their basic metric structure.

Vertices carry opaque hashable labels. Internally every vertex is a dense
index ``0..n-1`` (its position in ``Graph.labels``) and adjacency is held
twice: as a sorted tuple of neighbor indices per vertex, and as an integer
bitmask per vertex for constant-time membership tests and fast set algebra.

Distances to unreachable vertices are :data:`INF`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import GraphError, PreconditionError

INF = math.inf

Label = Hashable


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph: no loops, no multiple edges.

    >>> g = Graph("abc", [("a", "b"), ("b", "c"), ("b", "a")])
    >>> g.n, g.m
    (3, 2)
    >>> g.neighbors("b")
    ('a', 'c')
    """

    __slots__ = ("_labels", "_index", "_adj", "_nbrs", "_m")

    def __init__(self, labels: Iterable[Label] = (), edges: Iterable[tuple[Label, Label]] = ()):
        labels = tuple(labels)
        index: dict[Label, int] = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise GraphError(f"duplicate vertex label {lab!r}")
            index[lab] = i
        adj = [0] * len(labels)
        for edge in edges:
            try:
                u, v = edge
            except (TypeError, ValueError):
                raise GraphError(f"edge {edge!r} is not a pair") from None
            if u not in index:
                raise GraphError(f"unknown endpoint {u!r}")
            if v not in index:
                raise GraphError(f"unknown endpoint {v!r}")
            i, j = index[u], index[v]
            if i == j:
                raise GraphError(f"self-loop at {u!r}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self._init(labels, index, adj)

    def _init(self, labels, index, adj) -> None:
        self._labels = labels
        self._index = index
        self._adj = tuple(adj)
        self._nbrs = tuple(tuple(iter_bits(a)) for a in adj)
        self._m = sum(len(nb) for nb in self._nbrs) // 2

    @classmethod
    def from_masks(cls, adj: Sequence[int], labels: Sequence[Label] | None = None) -> Graph:
        """Build from per-vertex neighbor bitmasks (trusted to be symmetric and loop-free)."""
        n = len(adj)
        labels = tuple(range(n)) if labels is None else tuple(labels)
        if len(labels) != n:
            raise GraphError("label count does not match adjacency size")
        g = cls.__new__(cls)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != n:
            raise GraphError("duplicate vertex label")
        g._init(labels, index, list(adj))
        return g

    @classmethod
    def from_edge_indices(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[Label] | None = None
    ) -> Graph:
        """Build a graph on vertices ``0..n-1`` (or ``labels``) from index pairs."""
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise GraphError(f"self-loop at index {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls.from_masks(adj, labels)

    # -- basic accessors -------------------------------------------------

    @property
    def labels(self) -> tuple[Label, ...]:
        return self._labels

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def m(self) -> int:
        return self._m

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbor bitmask of every vertex, by index."""
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << len(self._labels)) - 1

    def index(self, label: Label) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise GraphError(f"unknown vertex {label!r}") from None

    def label(self, i: int) -> Label:
        return self._labels[i]

    def labels_of(self, mask_or_indices: int | Iterable[int]) -> frozenset:
        if isinstance(mask_or_indices, int):
            mask_or_indices = iter_bits(mask_or_indices)
        return frozenset(self._labels[i] for i in mask_or_indices)

    def nbr_indices(self, i: int) -> tuple[int, ...]:
        return self._nbrs[i]

    def neighbors(self, u: Label) -> tuple[Label, ...]:
        return tuple(self._labels[j] for j in self._nbrs[self.index(u)])

    def degree(self, u: Label) -> int:
        return len(self._nbrs[self.index(u)])

    def has_edge(self, u: Label, v: Label) -> bool:
        return bool(self._adj[self.index(u)] >> self.index(v) & 1)

    def edge_indices(self) -> list[tuple[int, int]]:
        """Edges as index pairs ``(i, j)`` with ``i < j``, in lexicographic order."""
        return [(i, j) for i, nb in enumerate(self._nbrs) for j in nb if i < j]

    def edges(self) -> list[tuple[Label, Label]]:
        lab = self._labels
        return [(lab[i], lab[j]) for i, j in self.edge_indices()]

    def __contains__(self, label: object) -> bool:
        try:
            return label in self._index
        except TypeError:
            return False

    def __len__(self) -> int:
        return len(self._labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._labels, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(vertex_labels: Sequence[Label], edges: Iterable[tuple[Label, Label]]) -> Graph:
    """Validate labels and edges and return the resulting :class:`Graph`.

    Duplicate edges collapse; duplicate labels, unknown endpoints and
    self-loops raise :class:`GraphError`.
    """
    return Graph(vertex_labels, edges)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph.from_masks([full & ~a & ~(1 << i) for i, a in enumerate(g.masks)], g.labels)


def induced_subgraph(g: Graph, vertices: Iterable[Label]) -> Graph:
    """Point subgraph on ``vertices``; vertex order follows ``g``."""
    keep = sorted({g.index(v) for v in vertices})
    return induced_by_indices(g, keep)


def induced_by_indices(g: Graph, keep: Sequence[int]) -> Graph:
    pos = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        a = 0
        for j in g.nbr_indices(old):
            if j in pos:
                a |= 1 << pos[j]
        adj.append(a)
    return Graph.from_masks(adj, [g.label(i) for i in keep])


# -- distances --------------------------------------------------------------


def bfs_layers(adj: Sequence[int], source: int, within: int | None = None) -> list[int]:
    """Distance layers from ``source`` as bitmasks; layer ``i`` holds vertices at distance ``i``.

    ``within`` optionally restricts the search to an induced vertex subset.
    """
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        if within is not None:
            nxt &= within
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def distances_from(g: Graph, i: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    for d, layer in enumerate(bfs_layers(g.masks, i)):
        for v in iter_bits(layer):
            dist[v] = d
    return dist


def distance(g: Graph, u: Label, v: Label) -> float:
    """Shortest-path length between ``u`` and ``v``; :data:`INF` across components."""
    i, j = g.index(u), g.index(v)
    for d, layer in enumerate(bfs_layers(g.masks, i)):
        if layer >> j & 1:
            return d
    return INF


def neighborhood(g: Graph, u: Label, i: int) -> frozenset:
    """Vertices at distance exactly ``i`` from ``u``."""
    if i < 1:
        raise PreconditionError("neighborhood order must be >= 1")
    layers = bfs_layers(g.masks, g.index(u))
    return g.labels_of(layers[i]) if i < len(layers) else frozenset()


def eccentricity_index(g: Graph, i: int) -> float:
    layers = bfs_layers(g.masks, i)
    reached = 0
    for layer in layers:
        reached |= layer
    return len(layers) - 1 if reached == g.full_mask else INF


@dataclass(frozen=True)
class MetricProfile:
    eccentricity: dict
    radius: float
    diameter: float
    radial_center: frozenset


def metric_profile(g: Graph) -> MetricProfile:
    """Eccentricities, radius, diameter and radial center of ``g``.

    A disconnected graph has every eccentricity, the radius and the
    diameter equal to :data:`INF`. The null graph is treated the same way.
    """
    if g.n == 0:
        return MetricProfile({}, INF, INF, frozenset())
    ecc = [eccentricity_index(g, i) for i in range(g.n)]
    radius = min(ecc)
    return MetricProfile(
        eccentricity={g.label(i): e for i, e in enumerate(ecc)},
        radius=radius,
        diameter=max(ecc),
        radial_center=g.labels_of(i for i, e in enumerate(ecc) if e == radius),
    )


def diameter(g: Graph) -> float:
    if g.n == 0:
        return INF
    return max(eccentricity_index(g, i) for i in range(g.n))


def has_diameter_at_most_two(g: Graph) -> bool:
    """Fast test that every vertex reaches every other in at most two steps."""
    adj = g.masks
    full = g.full_mask
    if g.n == 0:
        return False
    for i, a in enumerate(adj):
        reach = a | (1 << i)
        if reach == full:
            continue
        for j in g.nbr_indices(i):
            reach |= adj[j]
        if reach != full:
            return False
    return True


# -- neighbor partitions ------------------------------------------------------


@dataclass(frozen=True)
class NeighborPartition:
    """Split of ``V - {u, v}`` by adjacency to ``u`` and to ``v``."""

    common: frozenset
    only_u: frozenset
    only_v: frozenset
    neither: frozenset


def partition_masks(g: Graph, i: int, j: int) -> tuple[int, int, int, int]:
    rest = g.full_mask & ~(1 << i) & ~(1 << j)
    a, b = g.masks[i] & rest, g.masks[j] & rest
    return a & b, a & ~b, b & ~a, rest & ~(a | b)


def neighbor_partition(g: Graph, u: Label, v: Label) -> NeighborPartition:
    i, j = g.index(u), g.index(v)
    if i == j:
        raise PreconditionError("neighbor_partition needs two distinct vertices")
    return NeighborPartition(*(g.labels_of(mask) for mask in partition_masks(g, i, j)))


# -- connectivity -------------------------------------------------------------


def component_masks(g: Graph) -> list[int]:
    remaining = g.full_mask
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = 0
        for layer in bfs_layers(g.masks, start):
            comp |= layer
        comps.append(comp)
        remaining &= ~comp
    return comps


def components(g: Graph) -> list[frozenset]:
    """Connected components, ordered by their lowest vertex index."""
    return [g.labels_of(c) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(component_masks(g)) == 1


def cutpoint_indices(g: Graph) -> list[int]:
    """Articulation points by iterative depth-first search with low-points."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, -1, iter(g.nbr_indices(root)))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.nbr_indices(w))))
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if p != root and low[v] >= disc[p]:
                        cut[p] = True
        if root_children > 1:
            cut[root] = True
    return [i for i in range(n) if cut[i]]


def cutpoints(g: Graph) -> frozenset:
    """Vertices whose removal disconnects the (connected) graph ``g``."""
    if not is_connected(g):
        raise PreconditionError("cutpoints requires a connected graph")
    return g.labels_of(cutpoint_indices(g))


# -- degrees -----------------------------------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    degrees: dict
    min_degree: int
    max_degree: int


def degree_profile(g: Graph) -> DegreeProfile:
    degs = [len(g.nbr_indices(i)) for i in range(g.n)]
    return DegreeProfile(
        degrees={g.label(i): d for i, d in enumerate(degs)},
        min_degree=min(degs, default=0),
        max_degree=max(degs, default=0),
    )
