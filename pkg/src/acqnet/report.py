"""Edge-list ingestion, canonical JSON reports and DOT export.

Edge-list format, one record per line::

    # comment (anything after '#' is ignored)
    v alice            declares a vertex, isolated unless edges follow
    alice bob          an undirected edge

Labels are whitespace-free tokens. Duplicate edges collapse; a line naming
the same label twice is a self-loop and rejected. The token ``v`` in first
position always starts a vertex declaration.

JSON reports are canonical: fixed key order, labels sorted as strings in
every set, infinity written as the string ``"inf"``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any, Iterable

from .clubs import TwoClub
from .detectors import StructureWitnesses
from .errors import GraphError, ParseError
from .experiments import ExperimentResult
from .graph import Graph
from .span import GirthResult, SpanResult
from .typology import TypologyReport

REPORT_KEYS = (
    "n",
    "m",
    "diameter",
    "radius",
    "family",
    "separable",
    "span",
    "girth",
    "cell",
    "cliquishness",
    "star_centers",
    "central_pairs",
    "cutpoints",
    "singletons",
    "local_cliquelessness",
    "moore",
    "sst_edges",
    "alarms",
)


@dataclass(frozen=True)
class EdgeListDocument:
    declared_vertices: tuple[str, ...]
    edge_lines: tuple[tuple[str, str], ...]
    source_name: str = "<string>"

    def vertex_order(self) -> list[str]:
        """Declared vertices first, then edge endpoints in order of appearance."""
        seen: dict[str, None] = {}
        for v in self.declared_vertices:
            seen.setdefault(v)
        for u, v in self.edge_lines:
            seen.setdefault(u)
            seen.setdefault(v)
        return list(seen)

    def to_graph(self) -> Graph:
        return Graph(self.vertex_order(), self.edge_lines)


def parse_document(text: str, source_name: str = "<string>") -> EdgeListDocument:
    declared: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected two fields, got {len(tokens)}", lineno, source_name)
        a, b = tokens
        if a == "v":
            declared.append(b)
        elif a == b:
            raise ParseError(f"self-loop at {a!r}", lineno, source_name)
        else:
            edges.append((a, b))
    if not declared and not edges:
        raise ParseError("empty document", None, source_name)
    return EdgeListDocument(tuple(declared), tuple(edges), source_name)


def parse_edge_list(text: str, source_name: str = "<string>") -> Graph:
    doc = parse_document(text, source_name)
    try:
        return doc.to_graph()
    except GraphError as exc:  # pragma: no cover - the parser rejects these first
        raise ParseError(str(exc), None, source_name) from exc


def format_edge_list(g: Graph) -> str:
    """Normalized document: every vertex declared in order, then every edge once."""
    lines = [f"v {v}" for v in g.labels]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- JSON ----------------------------------------------------------------------


def _num(x: float | int | None) -> Any:
    if x is None:
        return None
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return int(x)


def _key(label) -> str:
    return str(label)


def _labels(s: Iterable | None) -> list | None:
    return None if s is None else sorted(s, key=_key)


def _pairs(pairs: Iterable | None) -> list | None:
    if pairs is None:
        return None
    return sorted((sorted(p, key=_key) for p in pairs), key=lambda p: [_key(x) for x in p])


def witnesses_to_dict(w: StructureWitnesses) -> dict:
    parts = w.multipartite_parts
    return {
        "star_centers": _labels(w.star_centers),
        "central_pairs": _pairs(w.central_pairs),
        "singletons": _labels(w.singletons),
        "cliqueless_points": _labels(w.cliqueless_points),
        "cliqueless_neighborhood_points": _labels(w.cliqueless_neighborhood_points),
        "multipartite_parts": None
        if parts is None
        else sorted((_labels(p) for p in parts), key=lambda p: [_key(x) for x in p]),
        "moore": w.moore,
    }


def report_to_dict(r: TypologyReport) -> dict:
    w = r.witnesses
    values = {
        "n": r.n,
        "m": r.m,
        "diameter": _num(r.diameter),
        "radius": _num(r.radius),
        "family": r.family.value,
        "separable": r.separable,
        "span": r.span,
        "girth": _num(r.girth),
        "cell": None if r.cell is None else list(r.cell),
        "cliquishness": r.cliquishness.value,
        "star_centers": _labels(w.star_centers) if w else None,
        "central_pairs": _pairs(w.central_pairs) if w else None,
        "cutpoints": _labels(r.cutpoints),
        "singletons": _labels(w.singletons) if w else None,
        "local_cliquelessness": r.local_cliquelessness,
        "moore": r.moore,
        "sst_edges": _pairs(r.sst_edges),
        "alarms": list(r.alarms),
    }
    return {k: values[k] for k in REPORT_KEYS}


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n"


def emit_report(r: TypologyReport) -> str:
    return dumps(report_to_dict(r))


def span_to_dict(s: SpanResult) -> dict:
    return {"span": s.span, "method": s.method.value, "sst_edges": _pairs(s.edges)}


def girth_to_dict(gr: GirthResult) -> dict:
    cycle = None if gr.witness_cycle is None else list(gr.witness_cycle)
    return {"girth": _num(gr.girth), "cycle": cycle}


def clubs_to_list(clubs: list[TwoClub]) -> list[dict]:
    return [
        {"members": _labels(c.members), "size": len(c.members), "induced_diameter": c.induced_diameter}
        for c in clubs
    ]


def experiment_to_dict(r: ExperimentResult) -> dict:
    return r.to_dict()


# -- DOT -----------------------------------------------------------------------


def _quote(label) -> str:
    return '"' + str(label).replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: Graph, highlight_tree: Iterable[tuple] | None = None, name: str = "G") -> str:
    """Undirected DOT text; ``highlight_tree`` edges are drawn bold."""
    bold = set()
    for u, v in highlight_tree or ():
        if not g.has_edge(u, v):
            raise GraphError(f"highlighted edge ({u!r}, {v!r}) is not in the graph")
        i, j = sorted((g.index(u), g.index(v)))
        bold.add((i, j))
    lines = [f"graph {_quote(name)} {{"]
    lines += [f"  {_quote(v)};" for v in g.labels]
    for i, j in g.edge_indices():
        style = " [style=bold]" if (i, j) in bold else ""
        lines.append(f"  {_quote(g.label(i))} -- {_quote(g.label(j))}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
