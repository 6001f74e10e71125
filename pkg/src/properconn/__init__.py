"""Proper connection numbers of graphs: exact search, constructive colorers
for the classical sufficient conditions, and a counterexample family showing
2-connectivity plus minimum degree 3 does not force two colors.
"""

from .graph import (
    Graph,
    GraphError,
    PreconditionError,
    InternalError,
    Bipartition,
    bfs_distances,
    connected_components,
    is_connected,
    diameter,
    all_pairs_distances,
    bipartition,
    odd_cycle,
    bridges,
    edge_connectivity,
    connectivity,
    is_k_connected,
)
from .coloring import (
    ColoringError,
    EdgeColoring,
    ProperPathCertificate,
    StrongWitness,
    StrongCheck,
    certificate_from_path,
    proper_walk_reach,
    proper_walk_exists,
    proper_path_exists,
    is_proper_connected,
    has_strong_property,
)
from .solver import (
    SearchBudgetExceeded,
    PcResult,
    SampleRefutation,
    exists_pc_coloring,
    pc_exact,
    sample_refute,
)
from .construct import (
    BridgeError,
    OddCycleError,
    ExtensionError,
    Diam3Decomposition,
    strong_2_coloring_bipartite,
    lift_spanning_coloring,
    extend_vertex_addition,
    color_3ec,
    color_2connected_3,
    classify_diam3,
    grow_by_degree2_additions,
    color_diam3,
)
from .counterexample import (
    VARIANTS,
    GadgetSpec,
    StructureReport,
    OneWayVertex,
    RefutationWitness,
    build_counterexample,
    verify_gadget_structure,
    find_one_way_vertex,
    refute_2_coloring,
)
from .io import (
    ParseError,
    RunReport,
    parse_graph,
    format_graph,
    parse_coloring,
    format_coloring,
)
from . import corpus

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "PreconditionError",
    "InternalError",
    "Bipartition",
    "bfs_distances",
    "connected_components",
    "is_connected",
    "diameter",
    "all_pairs_distances",
    "bipartition",
    "odd_cycle",
    "bridges",
    "edge_connectivity",
    "connectivity",
    "is_k_connected",
    "ColoringError",
    "EdgeColoring",
    "ProperPathCertificate",
    "StrongWitness",
    "StrongCheck",
    "certificate_from_path",
    "proper_walk_reach",
    "proper_walk_exists",
    "proper_path_exists",
    "is_proper_connected",
    "has_strong_property",
    "SearchBudgetExceeded",
    "PcResult",
    "SampleRefutation",
    "exists_pc_coloring",
    "pc_exact",
    "sample_refute",
    "BridgeError",
    "OddCycleError",
    "ExtensionError",
    "Diam3Decomposition",
    "strong_2_coloring_bipartite",
    "lift_spanning_coloring",
    "extend_vertex_addition",
    "color_3ec",
    "color_2connected_3",
    "classify_diam3",
    "grow_by_degree2_additions",
    "color_diam3",
    "VARIANTS",
    "GadgetSpec",
    "StructureReport",
    "OneWayVertex",
    "RefutationWitness",
    "build_counterexample",
    "verify_gadget_structure",
    "find_one_way_vertex",
    "refute_2_coloring",
    "ParseError",
    "RunReport",
    "parse_graph",
    "format_graph",
    "parse_coloring",
    "format_coloring",
    "corpus",
    "__version__",
]
