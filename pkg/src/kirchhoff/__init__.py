"""Exact effective resistance, Kirchhoff indices and extremal search over
complete multipartite graphs, with a brute-force oracle behind every closed
form."""

from .graphs import (
    DisconnectedGraphError,
    Graph,
    PartitionSpec,
    VertexLocator,
    complement,
    complete_graph,
    complete_multipartite,
    disjoint_union,
    empty_graph,
    join,
    parse_edge_list,
)
from .linalg import RatMatrix, RatPolynomial, SingularMatrixError, SizeLimitError
from .closed_forms import (
    FactoredMinorPoly,
    JoinSpectrum,
    dkf_closed,
    join_spectrum,
    kf_closed,
    kf_join,
    minor_charpoly,
    minor_det_two_vertices,
    multipartite_spectrum,
    quotient_matrix,
    resistance_closed,
    resistance_matrix_closed,
    spanning_trees,
)
from .oracle import (
    InvariantReport,
    degree_kirchhoff_index,
    invariant_report,
    kirchhoff_index,
    normalized_inverse_trace,
    resistance_matrix,
    spanning_tree_count,
)
from .extremal import (
    ExtremalResult,
    TableRow,
    check_exchange_lemma,
    enumerate_partitions,
    extremal_dkf,
    extremal_kf,
    generate_table,
)

__all__ = [
    "DisconnectedGraphError",
    "Graph",
    "PartitionSpec",
    "VertexLocator",
    "complement",
    "complete_graph",
    "complete_multipartite",
    "disjoint_union",
    "empty_graph",
    "join",
    "parse_edge_list",
    "RatMatrix",
    "RatPolynomial",
    "SingularMatrixError",
    "SizeLimitError",
    "FactoredMinorPoly",
    "JoinSpectrum",
    "dkf_closed",
    "join_spectrum",
    "kf_closed",
    "kf_join",
    "minor_charpoly",
    "minor_det_two_vertices",
    "multipartite_spectrum",
    "quotient_matrix",
    "resistance_closed",
    "resistance_matrix_closed",
    "spanning_trees",
    "InvariantReport",
    "degree_kirchhoff_index",
    "invariant_report",
    "kirchhoff_index",
    "normalized_inverse_trace",
    "resistance_matrix",
    "spanning_tree_count",
    "ExtremalResult",
    "TableRow",
    "check_exchange_lemma",
    "enumerate_partitions",
    "extremal_dkf",
    "extremal_kf",
    "generate_table",
]
