"""Collaboration distances (Erdős-style numbers) on co-authorship graphs."""
# ruff: noqa: F401

from .bounds import (
    BoundDerivation,
    BoundsLedger,
    CountFact,
    DistanceFact,
    FactKind,
    chain_bound,
    derived_base_facts,
    load_facts,
    parse_facts,
    tightest_upper_bound,
)
from .distance import (
    UNREACHABLE,
    GeodesicPath,
    Metric,
    a_number,
    a_numbers_from,
    distance_distribution,
    enumerate_path_lengths,
    geodesic,
    weighted_a_number,
    weighted_a_numbers_from,
)
from .errors import (
    ArithmeticOverflow,
    CollabDistError,
    EmptyAuthorList,
    InconsistentFact,
    InvalidFact,
    LimitExceeded,
    MalformedLine,
    MissingLink,
    NonPositiveCount,
    SelfEdge,
    UnknownAuthor,
    UnknownNode,
)
from .formatting import describe, format_decimal, fraction_str
from .graph import (
    CollaborationGraph,
    build_graph,
    collaboration_count,
    components,
    connected_component,
)
from .ingest import (
    EdgeRecord,
    PublicationRecord,
    expand_publications,
    parse_edge_csv,
    parse_publications_jsonl,
)

__version__ = "0.1.0"
