"""Acquaintance networks: span-girth typology of graphs with diameter two."""

from .clubs import TwoClub, classify_clubs, maximal_two_clubs
from .detectors import (
    StructureWitnesses,
    central_neighbor_pairs,
    cliqueless_hamlet_properties,
    cliqueless_neighborhood_points,
    cliqueless_points,
    complete_multipartite,
    moore_check,
    singleton_check,
    spanning_star_centers,
    structure_witnesses,
)
from .errors import (
    AcqnetError,
    CapExceededError,
    GraphError,
    ParseError,
    PreconditionError,
)
from .experiments import (
    DiameterClassPair,
    ExperimentResult,
    complement_diameter_census,
    diameter2_fraction,
    random_graph,
    sabidussi_scan,
)
from .graph import (
    INF,
    Graph,
    MetricProfile,
    NeighborPartition,
    build_graph,
    complement,
    components,
    cutpoints,
    degree_profile,
    distance,
    induced_subgraph,
    metric_profile,
    neighbor_partition,
    neighborhood,
)
from .report import emit_dot, emit_report, parse_edge_list
from .span import (
    GirthResult,
    SpanResult,
    bfs_spanning_tree,
    girth,
    smallest_spanning_tree,
    span_2club,
    span_bruteforce,
)
from .trees import Tree, TreeClass, TreeKind, certify_tree, classify_tree, prune_endpoints
from .typology import Family, TypologyReport, characterize_span, classify, subclass_count

__version__ = "0.1.0"
