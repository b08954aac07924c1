"""Exact Hermitian Laplacians of mixed graphs over the Eisenstein integers."""

from .eisenstein import OMEGA, OMEGA_BAR, ONE, UNITS, ZERO, EisensteinInt, NotDivisibleError
from .graph import (
    CycleBudgetExceeded,
    Edge,
    GraphFormatError,
    MixedGraph,
    MixedWalk,
    Other,
    RootlessTree,
    Substructure,
    Unicyclic,
    classify_component,
    components,
    load_graph,
    parse_graph,
    simple_cycles,
    walk_class,
)
from .linalg import cofactor, det, rank
from .matrices import ExactMatrix, build_D, build_L, build_N, build_Q, build_S, build_T, submatrix
from .minors import (
    MinorReport,
    cauchy_binet_expand,
    enumerate_generalized_matchings,
    offdiag_minor_L,
    offdiag_minor_Q,
    principal_minor_L,
    principal_minor_Q,
    spanning_trees_kirchhoff,
    tree_count_via_L,
    tree_count_via_Q,
)
from .structure import (
    classify_cycle,
    classify_substructure,
    null_vector_from_quasi,
    null_vector_from_sp,
    quasi_null_labeling,
    sp_labeling,
)
from .verify import SweepSpec, enumerate_orientations, generate_psi4_graph, generate_sp_graph, run_sweep

__version__ = "0.1.0"

__all__ = [
    "OMEGA",
    "OMEGA_BAR",
    "ONE",
    "UNITS",
    "ZERO",
    "EisensteinInt",
    "NotDivisibleError",
    "CycleBudgetExceeded",
    "Edge",
    "GraphFormatError",
    "MixedGraph",
    "MixedWalk",
    "Other",
    "RootlessTree",
    "Substructure",
    "Unicyclic",
    "classify_component",
    "components",
    "load_graph",
    "parse_graph",
    "simple_cycles",
    "walk_class",
    "cofactor",
    "det",
    "rank",
    "ExactMatrix",
    "build_D",
    "build_L",
    "build_N",
    "build_Q",
    "build_S",
    "build_T",
    "submatrix",
    "MinorReport",
    "cauchy_binet_expand",
    "enumerate_generalized_matchings",
    "offdiag_minor_L",
    "offdiag_minor_Q",
    "principal_minor_L",
    "principal_minor_Q",
    "spanning_trees_kirchhoff",
    "tree_count_via_L",
    "tree_count_via_Q",
    "classify_cycle",
    "classify_substructure",
    "null_vector_from_quasi",
    "null_vector_from_sp",
    "quasi_null_labeling",
    "sp_labeling",
    "SweepSpec",
    "enumerate_orientations",
    "generate_psi4_graph",
    "generate_sp_graph",
    "run_sweep",
]
