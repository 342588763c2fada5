"""Trees: certification, endpoint pruning and star / coupled-star / double-star classes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import PreconditionError
from .graph import Graph, bfs_layers, induced_by_indices, is_connected


class TreeKind(str, Enum):
    TRIVIAL = "trivial"
    STAR = "star"
    COUPLED_STAR = "coupled_star"
    DOUBLE_STAR = "double_star"
    OTHER = "other"


@dataclass(frozen=True)
class Rejection:
    """Why a graph is not a tree. Falsy, so ``if certify_tree(g):`` reads naturally."""

    reason: str

    def __bool__(self) -> bool:
        return False


class Tree:
    """A graph certified connected and acyclic."""

    __slots__ = ("graph",)

    def __init__(self, graph: Graph):
        problem = _tree_problem(graph)
        if problem:
            raise PreconditionError(f"not a tree: {problem}")
        self.graph = graph

    @property
    def n(self) -> int:
        return self.graph.n

    def endpoints(self) -> frozenset:
        g = self.graph
        return g.labels_of(i for i in range(g.n) if len(g.nbr_indices(i)) == 1)

    def diameter(self) -> int:
        # the farthest vertex from any vertex is an end of a longest path
        g = self.graph
        far = bfs_layers(g.masks, 0)[-1]
        start = (far & -far).bit_length() - 1
        return len(bfs_layers(g.masks, start)) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tree) and self.graph == other.graph

    def __hash__(self) -> int:
        return hash(self.graph)

    def __repr__(self) -> str:
        return f"Tree(n={self.n})"


def _tree_problem(g: Graph) -> str | None:
    if g.n == 0:
        return "empty"
    if not is_connected(g):
        return "disconnected"
    if g.m != g.n - 1:
        return "cyclic"
    return None


def certify_tree(g: Graph) -> Tree | Rejection:
    problem = _tree_problem(g)
    return Rejection(problem) if problem else Tree(g)


def prune_endpoints(t: Tree) -> Graph:
    """The tree left after deleting every endpoint (degree-1 vertex) of ``t``."""
    g = t.graph
    if g.n < 2:
        raise PreconditionError("pruning needs a tree with at least two vertices")
    keep = [i for i in range(g.n) if len(g.nbr_indices(i)) != 1]
    return induced_by_indices(g, keep)


@dataclass(frozen=True)
class TreeClass:
    kind: TreeKind
    radial_center: frozenset
    radius: int
    diameter: int


_KIND_BY_DIAMETER = {
    0: TreeKind.TRIVIAL,
    1: TreeKind.TRIVIAL,
    2: TreeKind.STAR,
    3: TreeKind.COUPLED_STAR,
    4: TreeKind.DOUBLE_STAR,
}


def longest_path(t: Tree) -> list[int]:
    """Vertex indices of one longest path, found by two sweeps of breadth-first search."""
    g = t.graph
    far = bfs_layers(g.masks, 0)[-1]
    a = (far & -far).bit_length() - 1
    layers = bfs_layers(g.masks, a)
    end = layers[-1]
    b = (end & -end).bit_length() - 1
    path = [b]
    for layer in reversed(layers[:-1]):
        nxt = g.masks[path[-1]] & layer
        path.append((nxt & -nxt).bit_length() - 1)
    return path


def classify_tree(t: Tree) -> TreeClass:
    """Classify by diameter and read off the radial center from a longest path.

    The middle vertex (even diameter) or the two middle vertices (odd
    diameter) of any longest path form the radial center.
    """
    path = longest_path(t)
    d = len(path) - 1
    if d % 2 == 0:
        center = [path[d // 2]]
        radius = d // 2
    else:
        center = [path[d // 2], path[d // 2 + 1]]
        radius = (d + 1) // 2
    return TreeClass(
        kind=_KIND_BY_DIAMETER.get(d, TreeKind.OTHER),
        radial_center=t.graph.labels_of(center),
        radius=radius,
        diameter=d,
    )


def kind_by_pruning(t: Tree) -> TreeKind:
    """Classify from the shape of the pruned tree instead of the diameter.

    Star: pruned tree is a single vertex. Coupled star: an edge. Double star:
    a star on at least three vertices. Used to cross-check :func:`classify_tree`.
    """
    if t.n <= 2:
        return TreeKind.TRIVIAL
    core = prune_endpoints(t)
    if core.n == 1:
        return TreeKind.STAR
    if core.n == 2:
        return TreeKind.COUPLED_STAR
    hubs = [i for i in range(core.n) if len(core.nbr_indices(i)) == core.n - 1]
    if hubs and core.m == core.n - 1:
        return TreeKind.DOUBLE_STAR
    return TreeKind.OTHER


def tree_edges_to_graph(g: Graph, edges: list[tuple[int, int]]) -> Tree:
    """Wrap a spanning edge set (index pairs of ``g``) as a :class:`Tree` on ``g``'s labels."""
    return Tree(Graph.from_edge_indices(g.n, edges, g.labels))


__all__ = [
    "Rejection",
    "Tree",
    "TreeClass",
    "TreeKind",
    "certify_tree",
    "classify_tree",
    "kind_by_pruning",
    "longest_path",
    "prune_endpoints",
    "tree_edges_to_graph",
]
