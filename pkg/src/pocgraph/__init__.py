"""Exact price-of-connectivity toolkit.

Computes the ratio tau_c/tau of vertex cover against connected vertex
cover exactly, recognizes the hereditary classes it bounds, builds the
ratio-forcing reduction gadgets, and machine-verifies the structural
results on exhaustively enumerated small graphs.
"""

from .graph import (Graph, VertexSet, complete_graph, cycle_graph, disjoint_union,
                    empty_graph, path_graph, star_graph)
from .io import (FormatError, GraphDocument, emit_dot, emit_graph6,
                 parse_edge_list, parse_graph6, read_graph6_document)
from .solver import (PocUndefinedError, SolveResult, all_minimum_vertex_covers,
                     connected_vertex_cover_number, is_connected_vertex_cover,
                     is_vertex_cover, poc, vertex_cover_number)
from .patterns import PATTERNS, Pattern
from .recognizers import (ClassLabel, PocClass, build_special_tree, classify,
                          contains_induced, is_chordal, is_critical,
                          is_special_tree, is_strongly_critical)
from .gadgets import (GadgetOutput, ReductionPlan, attach_caterpillars, connectify,
                      fix_tau, fix_tauc, full_reduction, join_disjoint,
                      replicate_join, solve_ab)
from .enumeration import (CONNECTED_GRAPH_COUNTS, enumerate_connected,
                          enumerate_connected_chordal)
from .verify import (CHECKS, TheoremReport, check_characterization,
                     check_corollary_chordal_p7free, check_critical_chordal,
                     check_observation1, check_strongly_critical_structure,
                     find_strongly_critical, verify_gadgets)

__version__ = "0.1.0"

__all__ = [
    "Graph", "VertexSet", "path_graph", "cycle_graph", "complete_graph",
    "star_graph", "empty_graph", "disjoint_union",
    "parse_graph6", "emit_graph6", "read_graph6_document", "parse_edge_list",
    "emit_dot", "GraphDocument", "FormatError",
    "vertex_cover_number", "connected_vertex_cover_number", "poc",
    "all_minimum_vertex_covers", "SolveResult", "PocUndefinedError",
    "is_vertex_cover", "is_connected_vertex_cover",
    "PATTERNS", "Pattern", "contains_induced", "is_chordal", "classify",
    "ClassLabel", "PocClass", "build_special_tree", "is_special_tree",
    "is_critical", "is_strongly_critical",
    "fix_tauc", "fix_tau", "connectify", "replicate_join", "join_disjoint",
    "solve_ab", "attach_caterpillars", "full_reduction", "GadgetOutput",
    "ReductionPlan",
    "enumerate_connected", "enumerate_connected_chordal", "CONNECTED_GRAPH_COUNTS",
    "check_observation1", "check_characterization", "check_corollary_chordal_p7free",
    "check_critical_chordal", "check_strongly_critical_structure", "verify_gadgets",
    "find_strongly_critical", "TheoremReport", "CHECKS",
    "__version__",
]
