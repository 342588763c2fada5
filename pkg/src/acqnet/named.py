"""Small named graphs used throughout the documentation and tests.

Unless noted otherwise vertices are labelled ``0..n-1``.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph.from_edge_indices(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph.from_edge_indices(n, ())


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edge_indices(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edge_indices(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """The star S_n on ``n`` vertices with center 0."""
    return Graph.from_edge_indices(n, [(0, i) for i in range(1, n)])


def complete_multipartite_graph(*sizes: int) -> Graph:
    """Complete multipartite graph; part ``k`` holds the next ``sizes[k]`` indices."""
    part = [k for k, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return Graph.from_edge_indices(
        n, [(i, j) for i, j in combinations(range(n), 2) if part[i] != part[j]]
    )


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return complete_multipartite_graph(a, b)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return Graph.from_edge_indices(10, outer + spokes + inner)


def k6_minus_edge() -> Graph:
    """K_6 with the edge (0, 1) removed."""
    return Graph.from_edge_indices(6, [e for e in combinations(range(6), 2) if e != (0, 1)])


def coupled_star(left: int, right: int) -> Graph:
    """Two adjacent hubs 0 and 1 carrying ``left`` and ``right`` leaves."""
    edges = [(0, 1)]
    nxt = 2
    for hub, count in ((0, left), (1, right)):
        for _ in range(count):
            edges.append((hub, nxt))
            nxt += 1
    return Graph.from_edge_indices(nxt, edges)


def double_star(branches: list[int]) -> Graph:
    """Center 0 joined to one hub per entry of ``branches``; hub ``k`` gets ``branches[k]`` leaves."""
    edges = []
    nxt = 1
    for count in branches:
        hub = nxt
        edges.append((0, hub))
        nxt += 1
        for _ in range(count):
            edges.append((hub, nxt))
            nxt += 1
    return Graph.from_edge_indices(nxt, edges)


def h6_graph() -> Graph:
    """The six-vertex cliqueless hamlet H6, labelled ``1..6``.

    A pentagon ``1-2-3-4-5`` plus vertex 6 joined to 1 and 3.
    """
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 1), (6, 3)]
    return Graph(range(1, 7), edges)


def h7_graph() -> Graph:
    """H6 plus vertex 7 joined to 2, 3 and 4 (labels ``1..7``); a cliquish hamlet."""
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 1), (6, 3), (7, 2), (7, 3), (7, 4)]
    return Graph(range(1, 8), edges)


def locally_cliqueless_hamlet() -> Graph:
    """The seven-vertex cliquish hamlet with a cliqueless neighborhood (labels ``1..7``).

    Pentagon ``1-2-3-4-5``; vertex 6 joined to 1, 5 and 7; vertex 7 joined
    to 3 and 6. The only triangle is ``{1, 5, 6}``, and every neighbor of
    vertex 3 avoids it. Up to isomorphism this is the unique such graph on
    seven vertices.
    """
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 1), (6, 5), (6, 7), (7, 3)]
    return Graph(range(1, 8), edges)
