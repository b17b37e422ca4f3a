"""Structure theory, clique covers and colorings for {3K1, paraglider}-free graphs."""

from .certify import Certificate, OddMinorModel, certify_conjecture, has_odd_clique_minor, oh_small
from .cover import CliqueCover, Coloring, CoverTrace, WitnessTriple, build_cover, color, witness_independent_set
from .decompose import Decomposition, Label, classify, decompose, validate_structure
from .errors import (
    BudgetExceeded,
    ClassViolation,
    GraphParseError,
    GraphSizeError,
    InternalContradiction,
    MalformedStructure,
    NotTriangleFreeError,
    ParagliderError,
)
from .exact import brute_invariants, theta_triangle_free
from .families import GenParams, make_bhat, make_hstar, make_ht, random_class_member
from .graph import Graph, complement, components, format_graph, max_matching, parse_graph, read_graph, shortest_odd_cycle
from .patterns import PatternName, has_induced, in_class_H, is_quasi_line, is_target_class, pattern_graph

__version__ = "0.1.0"
