"""Almost-self-centered graph analysis, embeddings, and exact indices.

A graph is r-ASC when its radius is r and exactly two vertices are
non-central; theta_r(G) is the least number of vertices whose addition
embeds G induced into an r-ASC host. The package verifies the property,
realizes the known upper-bound constructions, classifies diameter-2 graphs
by their 3-ASC index, and pins exact values by exhaustive search.
"""

from .analysis import (
    AscVerdict,
    ConditionWitness,
    Diam2Classification,
    asc_verdict,
    check_isolated_vertex,
    check_new_added,
    check_no_triple,
    check_p3,
    check_union_of_complete,
    classify_diam2,
    diametrical_structure,
    ecc_set,
    is_r_asc,
    n2_set,
    revalidate,
)
from .constructions import (
    Embedding,
    embed_2sc_three,
    embed_auto,
    embed_by_method,
    embed_complete,
    embed_connected,
    embed_cycle,
    embed_diam2_four,
    embed_general,
    embed_hat,
    embed_path,
    embed_tree_caterpillar,
    embed_triple_isolated,
    embed_triple_p3,
    verify_embedding,
)
from .errors import (
    DisconnectedGraphError,
    InternalCheckError,
    ParseError,
    PreconditionError,
)
from .families import FAMILY_KINDS, FamilySpec, build_family
from .graph import (
    EccProfile,
    Graph,
    bfs_distances,
    distance_matrix,
    ecc_profile,
    induced_check,
    is_connected,
)
from .graph6io import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .solver import (
    Budget,
    IndexCertificate,
    OrderSearchResult,
    PruneFlags,
    SearchOutcome,
    canonical_form,
    exact_index,
    exists_extension,
    min_asc_order,
    naive_reference,
    smallest_asc_order,
)

__version__ = "0.1.0"

__all__ = [
    "AscVerdict",
    "Budget",
    "ConditionWitness",
    "Diam2Classification",
    "DisconnectedGraphError",
    "EccProfile",
    "Embedding",
    "FAMILY_KINDS",
    "FamilySpec",
    "Graph",
    "IndexCertificate",
    "InternalCheckError",
    "OrderSearchResult",
    "ParseError",
    "PreconditionError",
    "PruneFlags",
    "SearchOutcome",
    "asc_verdict",
    "bfs_distances",
    "build_family",
    "canonical_form",
    "check_isolated_vertex",
    "check_new_added",
    "check_no_triple",
    "check_p3",
    "check_union_of_complete",
    "classify_diam2",
    "diametrical_structure",
    "distance_matrix",
    "ecc_profile",
    "ecc_set",
    "embed_2sc_three",
    "embed_auto",
    "embed_by_method",
    "embed_complete",
    "embed_connected",
    "embed_cycle",
    "embed_diam2_four",
    "embed_general",
    "embed_hat",
    "embed_path",
    "embed_tree_caterpillar",
    "embed_triple_isolated",
    "embed_triple_p3",
    "exact_index",
    "exists_extension",
    "induced_check",
    "is_connected",
    "is_r_asc",
    "min_asc_order",
    "n2_set",
    "naive_reference",
    "parse_edge_list",
    "parse_graph6",
    "revalidate",
    "smallest_asc_order",
    "verify_embedding",
    "write_edge_list",
    "write_graph6",
]
