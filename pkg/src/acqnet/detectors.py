"""Structural witnesses inside acquaintance networks.

Spanning stars, central neighbor pairs, singletons, cliqueless points and
neighborhoods, complete multipartite structure, Moore graphs, and the
checklist every cliqueless hamlet satisfies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import CapExceededError, PreconditionError
from .graph import (
    Graph,
    complement,
    component_masks,
    is_connected,
    iter_bits,
    partition_masks,
)
from .span import girth, is_diameter_two, span_2club

MOORE_ORDERS = (5, 10, 50, 3250)
UNDECIDED_MOORE_ORDER = 3250
DEFAULT_CYCLE_CAP = 64


def spanning_star_centers(g: Graph) -> frozenset:
    return g.labels_of(i for i in range(g.n) if len(g.nbr_indices(i)) == g.n - 1)


def central_pair_indices(g: Graph) -> list[tuple[int, int]]:
    return [(i, j) for i, j in g.edge_indices() if not partition_masks(g, i, j)[3]]


def central_neighbor_pairs(g: Graph) -> list[tuple]:
    """Adjacent pairs that together neighbor every other vertex, in index order."""
    if not is_connected(g):
        raise PreconditionError("central_neighbor_pairs requires a connected graph")
    return [(g.label(i), g.label(j)) for i, j in central_pair_indices(g)]


def singleton_check(g: Graph) -> tuple[frozenset, bool]:
    """Degree-1 vertices and whether they all hang off one unique star center."""
    if not is_diameter_two(g):
        raise PreconditionError("diameter != 2")
    singles = [i for i in range(g.n) if len(g.nbr_indices(i)) == 1]
    if not singles:
        return frozenset(), True
    centers = [i for i in range(g.n) if len(g.nbr_indices(i)) == g.n - 1]
    holds = len(centers) == 1 and all(g.masks[s] == 1 << centers[0] for s in singles)
    return g.labels_of(singles), holds


def _on_triangle(g: Graph, i: int) -> bool:
    a = g.masks[i]
    return any(g.masks[j] & a for j in g.nbr_indices(i))


def cliqueless_point_mask(g: Graph) -> int:
    mask = 0
    for i in range(g.n):
        if not _on_triangle(g, i):
            mask |= 1 << i
    return mask


def cliqueless_points(g: Graph) -> frozenset:
    """Vertices on no triangle, i.e. whose neighborhood spans no edge."""
    return g.labels_of(cliqueless_point_mask(g))


def cliqueless_neighborhood_mask(g: Graph) -> int:
    free = cliqueless_point_mask(g)
    mask = 0
    for i in range(g.n):
        if g.masks[i] & ~free == 0:
            mask |= 1 << i
    return mask


def cliqueless_neighborhood_points(g: Graph) -> frozenset:
    """Vertices all of whose neighbors are cliqueless."""
    return g.labels_of(cliqueless_neighborhood_mask(g))


def complete_multipartite(g: Graph) -> list[frozenset] | None:
    """The parts of ``g`` if it is complete multipartite, else ``None``.

    ``g`` is complete multipartite exactly when every component of its
    complement is a complete graph; those components are the parts.
    """
    if g.n == 0:
        return None
    co = complement(g)
    parts = component_masks(co)
    for part in parts:
        for i in iter_bits(part):
            if co.masks[i] != part & ~(1 << i):
                return None
    return [g.labels_of(p) for p in parts]


def _is_regular(g: Graph) -> bool:
    return len({len(g.nbr_indices(i)) for i in range(g.n)}) <= 1


def moore_check(g: Graph) -> bool:
    """Regular, diameter 2, girth 5, on 5, 10, 50 or 3250 vertices."""
    if g.n not in MOORE_ORDERS or not _is_regular(g) or not is_diameter_two(g):
        return False
    return girth(g).girth == 5


# -- cycles --------------------------------------------------------------------


def cycles_of_length(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Each simple k-cycle once, as an index tuple starting at its smallest vertex.

    The second vertex is smaller than the last, which fixes the direction.
    """
    adj = g.masks
    for s in range(g.n):
        above = g.full_mask & ~((1 << (s + 1)) - 1)
        path = [s]

        def grow(used: int) -> Iterator[tuple[int, ...]]:
            last = path[-1]
            if len(path) == k:
                if adj[last] >> s & 1 and path[1] < path[-1]:
                    yield tuple(path)
                return
            for w in iter_bits(adj[last] & above & ~used):
                path.append(w)
                yield from grow(used | 1 << w)
                path.pop()

        yield from grow(1 << s)


def _diagonal(g: Graph, cycle: tuple[int, ...]) -> tuple[int, int] | None:
    k = len(cycle)
    for a in range(k):
        for b in range(a + 2, k):
            if a == 0 and b == k - 1:
                continue
            if g.masks[cycle[a]] >> cycle[b] & 1:
                return cycle[a], cycle[b]
    return None


def edge_on_pentagon(g: Graph, i: int, j: int) -> tuple[int, ...] | None:
    """A 5-cycle ``i, j, x, y, z`` through edge ``(i, j)``, if one exists."""
    adj = g.masks
    base = (1 << i) | (1 << j)
    for x in iter_bits(adj[j] & ~base):
        for y in iter_bits(adj[x] & ~base & ~(1 << x)):
            z_mask = adj[y] & adj[i] & ~base & ~(1 << x) & ~(1 << y)
            if z_mask:
                return (i, j, x, y, (z_mask & -z_mask).bit_length() - 1)
    return None


@dataclass(frozen=True)
class CheckItem:
    passed: bool
    counterexample: tuple | None = None


@dataclass(frozen=True)
class HamletChecklist:
    """Pass/fail per property, each failure with a witness in vertex labels.

    a: every edge has private neighbors on both sides.
    b: no edge has a common neighbor.
    c: every edge leaves some vertex undominated.
    d: every edge lies on a pentagon.
    e: every 4- and 5-cycle is diagonal-free.
    f: every neighborhood is an independent set.
    """

    a: CheckItem
    b: CheckItem
    c: CheckItem
    d: CheckItem
    e: CheckItem
    f: CheckItem

    def items(self) -> dict[str, CheckItem]:
        return {k: getattr(self, k) for k in "abcdef"}

    @property
    def all_passed(self) -> bool:
        return all(item.passed for item in self.items().values())


def cliqueless_hamlet_properties(g: Graph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> HamletChecklist:
    """Verify the six cliqueless-hamlet properties on a span-4, girth-4 graph.

    Property (e) enumerates every 4- and 5-cycle, so graphs above
    ``cycle_cap`` vertices are refused.
    """
    if not is_diameter_two(g):
        raise PreconditionError("diameter != 2")
    span = span_2club(g).span
    gi = girth(g).girth
    if span != 4 or gi != 4:
        raise PreconditionError(f"not a cliqueless hamlet (span {span}, girth {gi})")
    if g.n > cycle_cap:
        raise CapExceededError(f"n = {g.n} exceeds cycle enumeration cap {cycle_cap}")
    lab = g.label

    def first_failure(found) -> CheckItem:
        for witness in found:
            return CheckItem(False, tuple(lab(i) for i in witness))
        return CheckItem(True)

    edges = g.edge_indices()
    parts = {e: partition_masks(g, *e) for e in edges}
    a = first_failure(e for e in edges if not parts[e][1] or not parts[e][2])
    b = first_failure(e for e in edges if parts[e][0])
    c = first_failure(e for e in edges if not parts[e][3])
    d = first_failure(e for e in edges if edge_on_pentagon(g, *e) is None)
    e_item = first_failure(
        cyc + diag
        for k in (4, 5)
        for cyc in cycles_of_length(g, k)
        if (diag := _diagonal(g, cyc)) is not None
    )
    f = first_failure(
        (i, j) for i in range(g.n) for j in g.nbr_indices(i) if g.masks[j] & g.masks[i]
    )
    return HamletChecklist(a, b, c, d, e_item, f)


# -- aggregate -----------------------------------------------------------------


@dataclass(frozen=True)
class StructureWitnesses:
    star_centers: frozenset
    central_pairs: list = field(default_factory=list)
    singletons: frozenset = frozenset()
    cliqueless_points: frozenset = frozenset()
    cliqueless_neighborhood_points: frozenset = frozenset()
    multipartite_parts: list | None = None
    moore: bool = False


def structure_witnesses(g: Graph) -> StructureWitnesses:
    """All detectors at once on a connected graph."""
    if not is_connected(g):
        raise PreconditionError("structure witnesses require a connected graph")
    return StructureWitnesses(
        star_centers=spanning_star_centers(g),
        central_pairs=central_neighbor_pairs(g),
        singletons=g.labels_of(i for i in range(g.n) if len(g.nbr_indices(i)) == 1),
        cliqueless_points=cliqueless_points(g),
        cliqueless_neighborhood_points=cliqueless_neighborhood_points(g),
        multipartite_parts=complete_multipartite(g),
        moore=moore_check(g),
    )
