"""Maximal 2-clubs: vertex sets whose induced subgraph has diameter at most two.

2-clubs are not closed under taking subsets (the center of an induced
star holds it together), so the search cannot discard a vertex just
because a smaller set already fails. The branch-and-bound below keeps a
chosen set ``S`` and a pool ``P`` of still-allowed vertices, and uses two
facts that do survive:

* distances only grow when vertices are deleted, so if two members of ``S``
  are more than two apart inside ``S + P`` the whole subtree is dead;
* if ``S + P`` is itself a 2-club, every 2-club of the subtree lies inside
  it, so it is the only candidate the subtree can contribute.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, PreconditionError
from .graph import Graph, bfs_layers, induced_subgraph, iter_bits
from .typology import TypologyReport, classify

DEFAULT_NODE_CAP = 30


@dataclass(frozen=True)
class TwoClub:
    members: frozenset
    induced_diameter: int
    maximal: bool


def _popcount(x: int) -> int:
    return bin(x).count("1")


def club_diameter(adj, subset: int) -> int | None:
    """Diameter of the subgraph induced on ``subset`` if it is at most 2, else ``None``."""
    worst = 0
    for i in iter_bits(subset):
        reach = (adj[i] & subset) | (1 << i)
        if reach == subset:
            worst = max(worst, 1 if subset != 1 << i else 0)
            continue
        for j in iter_bits(adj[i] & subset):
            reach |= adj[j] & subset
        if reach != subset:
            return None
        worst = 2
    return worst


def is_two_club(g: Graph, members) -> bool:
    mask = 0
    for v in members:
        mask |= 1 << g.index(v)
    return mask != 0 and club_diameter(g.masks, mask) is not None


def _within_two(g: Graph) -> list[int]:
    """Per vertex, the mask of vertices at distance at most two in ``g``."""
    out = []
    for i in range(g.n):
        layers = bfs_layers(g.masks, i)
        mask = 0
        for layer in layers[:3]:
            mask |= layer
        out.append(mask)
    return out


def _separated(adj, chosen: int, pool: int) -> bool:
    """Some pair of chosen vertices is more than two apart inside ``chosen | pool``."""
    space = chosen | pool
    for i in iter_bits(chosen):
        reach = 0
        for layer in bfs_layers(adj, i, within=space)[:3]:
            reach |= layer
        if chosen & ~reach:
            return True
    return False


def _filter_maximal(candidates: set[int]) -> list[int]:
    ordered = sorted(candidates, key=_popcount, reverse=True)
    kept: list[int] = []
    for c in ordered:
        if not any(c != k and c & k == c for k in kept):
            kept.append(c)
    return kept


def _club_masks(g: Graph, min_size: int) -> list[int]:
    adj = g.masks
    near = _within_two(g)
    found: set[int] = set()

    def search(chosen: int, pool: int) -> None:
        if _popcount(chosen | pool) < min_size:
            return
        if chosen and _separated(adj, chosen, pool):
            return
        whole = chosen | pool
        if club_diameter(adj, whole) is not None:
            found.add(whole)
            return
        if not pool:
            return
        v = (pool & -pool).bit_length() - 1
        rest = pool & ~(1 << v)
        search(chosen | 1 << v, rest & near[v])
        search(chosen, rest)

    search(0, g.full_mask)
    return _filter_maximal(found)


def _sort_key(g: Graph, mask: int):
    return (-_popcount(mask), sorted(str(g.label(i)) for i in iter_bits(mask)))


def maximal_two_clubs(g: Graph, min_size: int = 1, node_cap: int = DEFAULT_NODE_CAP) -> list[TwoClub]:
    """Every maximal 2-club of ``g`` with at least ``min_size`` members.

    Sorted by size (largest first), then by sorted member labels. Graphs
    with more than ``node_cap`` vertices are refused.
    """
    if g.n > node_cap:
        raise CapExceededError(f"n = {g.n} exceeds node cap {node_cap}")
    if min_size > g.n:
        raise PreconditionError(f"min_size {min_size} exceeds n = {g.n}")
    masks = sorted(_club_masks(g, max(min_size, 1)), key=lambda m: _sort_key(g, m))
    clubs = []
    for mask in masks:
        d = club_diameter(g.masks, mask)
        if d is None:  # pragma: no cover - guarded by construction
            raise AssertionError("branch-and-bound returned a non-club")
        clubs.append(TwoClub(g.labels_of(mask), d, True))
    return clubs


def classify_clubs(g: Graph, clubs: list[TwoClub]) -> list[TypologyReport]:
    """Typology report of the subgraph induced by each club."""
    reports = []
    for club in clubs:
        if not all(v in g for v in club.members) or not is_two_club(g, club.members):
            raise PreconditionError(f"not a 2-club of this graph: {sorted(map(str, club.members))}")
        reports.append(classify(induced_subgraph(g, club.members)))
    return reports
