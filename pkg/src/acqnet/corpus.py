"""Exhaustive graph corpora for small vertex counts.

Graphs are generated one isomorphism class at a time. Every class on
``n`` vertices arises by attaching a new vertex to some class on ``n - 1``
vertices, so the generator extends each representative by every possible
neighbor set and keeps one graph per nauty certificate.

Isomorphism reduction never changes a verdict that depends only on the
isomorphism class (diameter, span, girth, typology). :func:`labeled_graphs`
gives the unreduced bitmask enumeration for cross-checking.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator

import pynauty

from .errors import CapExceededError
from .graph import Graph, is_connected

MAX_CORPUS_N = 9
MAX_LABELED_N = 7


def certificate(adj: tuple[int, ...]) -> bytes:
    n = len(adj)
    if n == 0:
        return b""
    pg = pynauty.Graph(n, adjacency_dict={i: [j for j in range(n) if a >> j & 1] for i, a in enumerate(adj)})
    return pynauty.certificate(pg)


def _subsets(n: int) -> range:
    return range(1 << n)


def _extend(
    classes: tuple[tuple[int, ...], ...], allow: Callable[[tuple[int, ...], int], bool]
) -> tuple[tuple[int, ...], ...]:
    seen: dict[bytes, tuple[int, ...]] = {}
    for adj in classes:
        n = len(adj)
        for nbrs in _subsets(n):
            if not allow(adj, nbrs):
                continue
            new = tuple(a | ((nbrs >> i & 1) << n) for i, a in enumerate(adj)) + (nbrs,)
            seen.setdefault(certificate(new), new)
    return tuple(seen.values())


def _any(adj, nbrs) -> bool:
    return True


def _independent(adj, nbrs) -> bool:
    return all(not (adj[i] & nbrs) for i in range(len(adj)) if nbrs >> i & 1)


@lru_cache(maxsize=None)
def _classes(n: int, kind: str) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    allow = {"all": _any, "triangle_free": _independent}[kind]
    return _extend(_classes(n - 1, kind), allow)


def _check(n: int) -> None:
    if not 1 <= n <= MAX_CORPUS_N:
        raise CapExceededError(f"corpus supports 1 <= n <= {MAX_CORPUS_N}, got {n}")


def graphs(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices."""
    _check(n)
    for adj in _classes(n, "all"):
        yield Graph.from_masks(adj)


def connected_graphs(n: int) -> Iterator[Graph]:
    for g in graphs(n):
        if is_connected(g):
            yield g


def triangle_free_graphs(n: int) -> Iterator[Graph]:
    """One triangle-free graph per isomorphism class on ``n`` vertices."""
    _check(n)
    for adj in _classes(n, "triangle_free"):
        yield Graph.from_masks(adj)


@lru_cache(maxsize=None)
def _tree_classes(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    seen: dict[bytes, tuple[int, ...]] = {}
    for adj in _tree_classes(n - 1):
        for leaf_parent in range(n - 1):
            new = tuple(a | ((i == leaf_parent) << (n - 1)) for i, a in enumerate(adj))
            new += (1 << leaf_parent,)
            seen.setdefault(certificate(new), new)
    return tuple(seen.values())


def trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices (``n <= 14``)."""
    if not 1 <= n <= 14:
        raise CapExceededError("tree corpus supports 1 <= n <= 14")
    for adj in _tree_classes(n):
        yield Graph.from_masks(adj)


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, one per adjacency bitmask."""
    if not 1 <= n <= MAX_LABELED_N:
        raise CapExceededError(f"labelled enumeration supports 1 <= n <= {MAX_LABELED_N}")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edge_indices(n, (p for k, p in enumerate(pairs) if code >> k & 1))
