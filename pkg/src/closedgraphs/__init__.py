"""Closed-graph recognition through proper interval orderings."""

from closedgraphs.closedness import (
    ClosednessViolation,
    RefusalError,
    brute_force_closed,
    find_induced_claw,
    is_closed_labeling,
)
from closedgraphs.cliques import FacetList, consecutive_ones, facets_of_closed, incidence_matrix
from closedgraphs.generators import generate
from closedgraphs.graph import (
    ContractViolation,
    Graph,
    LabeledGraph,
    ParseError,
    VertexOrdering,
    apply_labeling,
    format_edge_list,
    parse_edge_list,
)
from closedgraphs.groebner import edge_binomials, is_quadratic_groebner, reduce, s_polynomial
from closedgraphs.intervals import (
    IntervalRep,
    build_representation,
    compute_b,
    intersection_graph,
    is_proper,
)
from closedgraphs.recognition import (
    RecognitionResult,
    UmbrellaViolation,
    lexbfs,
    lexbfs_plus,
    ordering_to_closed_labeling,
    recognize_proper_interval,
    umbrella_check,
)

__all__ = [
    "ClosednessViolation",
    "ContractViolation",
    "FacetList",
    "Graph",
    "IntervalRep",
    "LabeledGraph",
    "ParseError",
    "RecognitionResult",
    "RefusalError",
    "UmbrellaViolation",
    "VertexOrdering",
    "apply_labeling",
    "brute_force_closed",
    "build_representation",
    "compute_b",
    "consecutive_ones",
    "edge_binomials",
    "facets_of_closed",
    "find_induced_claw",
    "format_edge_list",
    "generate",
    "incidence_matrix",
    "intersection_graph",
    "is_closed_labeling",
    "is_proper",
    "is_quadratic_groebner",
    "lexbfs",
    "lexbfs_plus",
    "ordering_to_closed_labeling",
    "parse_edge_list",
    "recognize_proper_interval",
    "reduce",
    "s_polynomial",
    "umbrella_check",
]
