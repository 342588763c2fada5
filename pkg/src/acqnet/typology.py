"""Span-girth classification of acquaintance networks.

Diameter-2 graphs split by span into the families of ``FAMILY_BY_SPAN``
and by girth into cliquish (3) or cliqueless (4 or 5). The occupied
span-girth cells are listed in :data:`CELLS`. Stars are kept as a family
of their own and graphs of diameter 0 or 1 are cliques. Anything else is
reported as ``not_acquaintance`` with its metrics filled in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .detectors import StructureWitnesses, structure_witnesses
from .errors import PreconditionError
from .graph import (
    INF,
    Graph,
    cutpoint_indices,
    degree_profile,
    has_diameter_at_most_two,
    is_connected,
    metric_profile,
    partition_masks,
)
from .span import girth, is_diameter_two, smallest_spanning_tree, span_2club

CELLS = ((2, 3), (3, 3), (3, 4), (4, 3), (4, 4), (4, 5))

SINGLETON_ALARM = "irregular graph of diameter 2 and girth 5 (contradicts Singleton 1968)"
UNDECIDED_MOORE_ALARM = "3250-vertex Moore graph candidate (existence undecided)"


class Family(str, Enum):
    CLIQUE = "clique"
    STAR = "star"
    COTERIE = "coterie"
    SOCIAL_CIRCLE = "social_circle"
    HAMLET = "hamlet"
    NOT_ACQUAINTANCE = "not_acquaintance"


FAMILY_BY_SPAN = {2: Family.COTERIE, 3: Family.SOCIAL_CIRCLE, 4: Family.HAMLET}


class Cliquishness(str, Enum):
    CLIQUISH = "cliquish"
    CLIQUELESS = "cliqueless"
    ACYCLIC = "acyclic"
    NOT_APPLICABLE = "n/a"


@dataclass(frozen=True)
class TypologyReport:
    graph: Graph
    n: int
    m: int
    diameter: float
    radius: float
    family: Family
    separable: bool
    span: int | None
    girth: float
    cell: tuple[int, int] | None
    cliquishness: Cliquishness
    witnesses: StructureWitnesses | None
    cutpoints: frozenset | None
    sst_edges: list | None
    local_cliquelessness: bool
    moore: bool
    alarms: list[str] = field(default_factory=list)


def classify(g: Graph) -> TypologyReport:
    """Full classification record for any graph."""
    prof = metric_profile(g)
    gi = girth(g)
    base = dict(graph=g, n=g.n, m=g.m, diameter=prof.diameter, radius=prof.radius, girth=gi.girth)
    if prof.diameter == INF or prof.diameter > 2:
        return TypologyReport(
            **base,
            family=Family.NOT_ACQUAINTANCE,
            separable=False,
            span=None,
            cell=None,
            cliquishness=Cliquishness.NOT_APPLICABLE,
            witnesses=None,
            cutpoints=g.labels_of(cutpoint_indices(g)) if is_connected(g) else None,
            sst_edges=None,
            local_cliquelessness=False,
            moore=False,
        )

    cuts = g.labels_of(cutpoint_indices(g))
    witnesses = structure_witnesses(g)
    common = dict(
        separable=bool(cuts),
        cutpoints=cuts,
        witnesses=witnesses,
        local_cliquelessness=bool(witnesses.cliqueless_neighborhood_points),
        moore=witnesses.moore,
    )
    if prof.diameter < 2:
        sst = smallest_spanning_tree(g)
        return TypologyReport(
            **base,
            **common,
            family=Family.CLIQUE,
            span=sst.span,
            cell=None,
            cliquishness=Cliquishness.NOT_APPLICABLE,
            sst_edges=sst.edges,
        )

    sst = span_2club(g)
    alarms = []
    if g.m == g.n - 1:
        family, cell, cliquishness = Family.STAR, None, Cliquishness.ACYCLIC
    else:
        family = FAMILY_BY_SPAN[sst.span]
        cell = (sst.span, int(gi.girth))
        cliquishness = Cliquishness.CLIQUISH if gi.girth == 3 else Cliquishness.CLIQUELESS
        if gi.girth == 5:
            degrees = degree_profile(g)
            if degrees.min_degree != degrees.max_degree:
                alarms.append(SINGLETON_ALARM)
            elif witnesses.moore and g.n == 3250:
                alarms.append(UNDECIDED_MOORE_ALARM)
    return TypologyReport(
        **base,
        **common,
        family=family,
        span=sst.span,
        cell=cell,
        cliquishness=cliquishness,
        sst_edges=sst.edges,
        alarms=alarms,
    )


def subclass_count(d: int) -> int:
    """Number of span-girth subclasses among graphs of diameter ``d``.

    Spans run from ``d`` to ``2d`` and a span ``t`` admits girths
    ``3..t+1``, which sums to ``(d + 1)(3d - 2) / 2``.
    """
    if d < 1:
        raise PreconditionError("diameter must be >= 1")
    return (d + 1) * (3 * d - 2) // 2


@dataclass(frozen=True)
class SpanCharacterization:
    """Which of the three span cases holds, with its certificate.

    ``pair`` is a dominating adjacent pair for span 3. For span 4,
    ``undominated`` maps every edge to a vertex adjacent to neither end.
    """

    span: int
    pair: tuple | None = None
    undominated: dict | None = None


def characterize_span(g: Graph) -> SpanCharacterization:
    """Decide the span of a diameter-2 graph from neighbor partitions of its edges.

    Complete graphs on three or more vertices are accepted too (span 2).
    """
    if g.n < 3 or not has_diameter_at_most_two(g):
        raise PreconditionError("diameter != 2")
    if any(len(g.nbr_indices(i)) == g.n - 1 for i in range(g.n)):
        return SpanCharacterization(2)
    undominated = {}
    for i, j in g.edge_indices():
        neither = partition_masks(g, i, j)[3]
        if not neither:
            return SpanCharacterization(3, pair=(g.label(i), g.label(j)))
        w = (neither & -neither).bit_length() - 1
        undominated[(g.label(i), g.label(j))] = g.label(w)
    return SpanCharacterization(4, undominated=undominated)


__all__ = [
    "CELLS",
    "Cliquishness",
    "Family",
    "SpanCharacterization",
    "TypologyReport",
    "characterize_span",
    "classify",
    "subclass_count",
]
