"""Span (diameter of a smallest spanning tree) and girth.

Three routes to the span are offered:

* :func:`span_2club` - exact closed form for graphs of diameter two, read
  off spanning stars and central neighbor pairs;
* :func:`bfs_spanning_tree` - a layered breadth-first tree whose diameter is
  at most twice the root's eccentricity (an upper-bound certificate);
* :func:`span_bruteforce` - exhaustive branch-and-bound over all spanning
  trees, independent of the other two, for small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import CapExceededError, PreconditionError
from .graph import (
    INF,
    Graph,
    bfs_layers,
    eccentricity_index,
    has_diameter_at_most_two,
    is_connected,
    iter_bits,
    partition_masks,
)
from .trees import Tree, tree_edges_to_graph

DEFAULT_BRUTE_FORCE_CAP = 9


class SpanMethod(str, Enum):
    CLOSED_FORM_2CLUB = "closed_form_2club"
    BFS_BOUND = "bfs_bound"
    BRUTE_FORCE = "brute_force"


@dataclass(frozen=True)
class SpanResult:
    """A span value with a spanning tree of exactly that diameter.

    With ``method == BFS_BOUND`` the value is an upper bound on the span.
    """

    span: int
    witness_tree: Tree
    method: SpanMethod

    @property
    def edges(self) -> list[tuple]:
        return self.witness_tree.graph.edges()


@dataclass(frozen=True)
class GirthResult:
    girth: float
    witness_cycle: tuple | None


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise PreconditionError("graph is not connected")


def is_diameter_two(g: Graph) -> bool:
    return g.n >= 3 and g.m < g.n * (g.n - 1) // 2 and has_diameter_at_most_two(g)


# -- layered breadth-first tree ------------------------------------------------


def layered_tree_edges(g: Graph, root: int) -> list[tuple[int, int]]:
    """Each vertex keeps one line to the previous layer: its lowest-indexed parent."""
    layers = bfs_layers(g.masks, root)
    edges = []
    for prev, layer in zip(layers, layers[1:]):
        for v in iter_bits(layer):
            parents = g.masks[v] & prev
            edges.append((v, (parents & -parents).bit_length() - 1))
    return edges


def bfs_spanning_tree(g: Graph, root) -> Tree:
    """Layered spanning tree rooted at ``root``; intra-layer lines are all dropped."""
    i = g.index(root)
    _require_connected(g)
    return tree_edges_to_graph(g, layered_tree_edges(g, i))


# -- closed form for diameter two ----------------------------------------------


def _central_pair_indices(g: Graph):
    for i, j in g.edge_indices():
        if not partition_masks(g, i, j)[3]:
            yield i, j


def span_2club(g: Graph) -> SpanResult:
    """Exact span of a diameter-2 graph with a smallest spanning tree as witness.

    Span 2 iff some vertex is adjacent to all others; span 3 iff some
    adjacent pair dominates the graph; span 4 otherwise. Ties go to the
    lowest vertex index (lexicographically lowest pair).
    """
    if not is_diameter_two(g):
        raise PreconditionError("diameter != 2")
    n = g.n
    for i in range(n):
        if len(g.nbr_indices(i)) == n - 1:
            edges = [(i, j) for j in range(n) if j != i]
            return SpanResult(2, tree_edges_to_graph(g, edges), SpanMethod.CLOSED_FORM_2CLUB)
    for u, v in _central_pair_indices(g):
        edges = [(u, v)]
        for w in range(n):
            if w not in (u, v):
                edges.append((u, w) if g.masks[u] >> w & 1 else (v, w))
        return SpanResult(3, tree_edges_to_graph(g, edges), SpanMethod.CLOSED_FORM_2CLUB)
    # no dominating vertex: every eccentricity is 2, so vertex 0 is the first radial point
    tree = tree_edges_to_graph(g, layered_tree_edges(g, 0))
    return SpanResult(4, tree, SpanMethod.CLOSED_FORM_2CLUB)


# -- exhaustive search ---------------------------------------------------------


def _trivial_lower_bound(n: int) -> int:
    return min(n - 1, 2)


def min_diameter_spanning_tree(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    """Branch-and-bound over acyclic edge subsets for a spanning tree of least diameter.

    Every edge is either taken or skipped. Taking an edge is allowed only
    when it joins two forest components and the merged component has
    diameter below the best complete tree found so far. Edge order only
    affects speed: edges at high-degree vertices come first.
    """
    n = g.n
    if n == 1:
        return 0, []
    degree = [len(g.nbr_indices(i)) for i in range(n)]
    rank = {v: r for r, v in enumerate(sorted(range(n), key=lambda v: (-degree[v], v)))}
    edges = sorted(g.edge_indices(), key=lambda e: sorted((rank[e[0]], rank[e[1]])))
    floor = _trivial_lower_bound(n)

    comp = list(range(n))
    comp_diam = [0] * n
    forest = [0] * n
    unseen = degree[:]  # untried edges at each vertex
    chosen: list[tuple[int, int]] = []
    best = [n, None]  # any spanning tree has diameter <= n - 1

    def ecc_in_forest(v: int) -> int:
        return len(bfs_layers(forest, v)) - 1

    def search(k: int) -> bool:
        if len(chosen) == n - 1:
            d = comp_diam[comp[0]]
            if d < best[0]:
                best[0], best[1] = d, list(chosen)
            return d <= floor
        if n - 1 - len(chosen) > len(edges) - k:
            return False
        u, v = edges[k]
        unseen[u] -= 1
        unseen[v] -= 1
        cu, cv = comp[u], comp[v]
        if cu != cv:
            merged = max(comp_diam[cu], comp_diam[cv], ecc_in_forest(u) + 1 + ecc_in_forest(v))
            if merged < best[0]:
                moved = [w for w in range(n) if comp[w] == cv]
                for w in moved:
                    comp[w] = cu
                old = comp_diam[cu]
                comp_diam[cu] = merged
                forest[u] |= 1 << v
                forest[v] |= 1 << u
                chosen.append((u, v))
                done = search(k + 1)
                chosen.pop()
                forest[u] &= ~(1 << v)
                forest[v] &= ~(1 << u)
                comp_diam[cu] = old
                for w in moved:
                    comp[w] = cv
                if done:
                    unseen[u] += 1
                    unseen[v] += 1
                    return True
        stranded = (not forest[u] and not unseen[u]) or (not forest[v] and not unseen[v])
        done = False if stranded else search(k + 1)
        unseen[u] += 1
        unseen[v] += 1
        return done

    search(0)
    return best[0], best[1]


def span_bruteforce(g: Graph, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> int:
    """Exact span by exhaustive search over spanning trees; refuses graphs above ``cap`` vertices."""
    if g.n > cap:
        raise CapExceededError(f"n = {g.n} exceeds brute-force cap {cap}")
    _require_connected(g)
    return min_diameter_spanning_tree(g)[0]


def smallest_spanning_tree(g: Graph, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> SpanResult:
    """Best available smallest spanning tree for any connected graph.

    Diameter-2 graphs use the closed form, graphs up to ``cap`` vertices the
    exhaustive search, and larger graphs fall back to the layered tree from
    the lowest-indexed radial point (an upper bound).
    """
    _require_connected(g)
    if is_diameter_two(g):
        return span_2club(g)
    if g.n <= cap:
        d, edges = min_diameter_spanning_tree(g)
        return SpanResult(d, tree_edges_to_graph(g, edges), SpanMethod.BRUTE_FORCE)
    ecc = [eccentricity_index(g, i) for i in range(g.n)]
    root = ecc.index(min(ecc))
    tree = tree_edges_to_graph(g, layered_tree_edges(g, root))
    return SpanResult(tree.diameter(), tree, SpanMethod.BFS_BOUND)


# -- girth ---------------------------------------------------------------------


def girth(g: Graph) -> GirthResult:
    """Shortest cycle length by breadth-first search from every vertex.

    Returns :data:`INF` and no witness for forests. The witness is the
    first shortest cycle met when roots and neighbors are scanned in index
    order.
    """
    n = g.n
    best = INF
    found = None
    for r in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[r] = 0
        queue = [r]
        for v in queue:
            if 2 * dist[v] + 1 >= best:
                break
            for w in g.nbr_indices(v):
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v] and dist[w] >= dist[v]:
                    length = dist[v] + dist[w] + 1
                    if length < best:
                        best = length
                        found = (v, w, parent[:])
    if found is None:
        return GirthResult(INF, None)
    v, w, parent = found

    def to_root(x: int) -> list[int]:
        path = [x]
        while parent[path[-1]] != -1:
            path.append(parent[path[-1]])
        return path

    cycle = to_root(v)[::-1] + to_root(w)[:-1]
    return GirthResult(best, tuple(g.label(i) for i in cycle))
