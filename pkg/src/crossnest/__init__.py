"""Crossing and nesting statistics of multigraphs, pattern-avoiding
fillings of Ferrers diagrams, and the sum-preserving bijections between
them."""

from ._kernel import active_backend
from .bijection import (
    IterationLimitExceeded,
    NoFtPresent,
    NoJtPresent,
    PreconditionError,
    a1,
    a2,
    graph_biject,
    it_jt_biject,
    lift_block,
    phi,
    psi,
)
from .codec import (
    EncodingError,
    JtFrame,
    LeftRightGraph,
    delta_decode,
    delta_encode,
    jt_frame,
    lr_decode,
    lr_encode,
)
from .experiments import (
    ExperimentReport,
    count_avoiders,
    run_experiment,
    verify_equirestrictive,
)
from .graphs import (
    DegreeSequence,
    Multigraph,
    SplitGraph,
    contains_subgraph,
    cross,
    cross_weak,
    degree_sequence,
    enumerate_graphs,
    is_feasible,
    is_k_noncrossing,
    is_k_nonnesting,
    matrix_of_split_graph,
    nest,
    nest_weak,
    split_graph_of_matrix,
    split_vertex,
)
from .patterns import (
    Occurrence,
    PatternMatrix,
    antiidentity,
    block_diag,
    contains,
    f_matrix,
    first_f_occurrence,
    first_j_occurrence,
    identity,
    m132,
    m213,
    max_antiidentity_order,
    max_identity_order,
    occurrences,
    parse_pattern,
)
from .shapes import (
    Filling,
    NotWeaklyDecreasing,
    Shape,
    SumProfile,
    enumerate_fillings,
    filling_from_rows,
    parse_filling,
    format_filling,
    sums_of,
    validate_shape,
)

__version__ = "0.1.0"

__all__ = [
    "DegreeSequence",
    "EncodingError",
    "ExperimentReport",
    "Filling",
    "IterationLimitExceeded",
    "JtFrame",
    "LeftRightGraph",
    "Multigraph",
    "NoFtPresent",
    "NoJtPresent",
    "NotWeaklyDecreasing",
    "Occurrence",
    "PatternMatrix",
    "PreconditionError",
    "Shape",
    "SplitGraph",
    "SumProfile",
    "a1",
    "a2",
    "active_backend",
    "antiidentity",
    "block_diag",
    "contains",
    "contains_subgraph",
    "count_avoiders",
    "cross",
    "cross_weak",
    "degree_sequence",
    "delta_decode",
    "delta_encode",
    "enumerate_fillings",
    "enumerate_graphs",
    "f_matrix",
    "filling_from_rows",
    "first_f_occurrence",
    "first_j_occurrence",
    "format_filling",
    "graph_biject",
    "identity",
    "is_feasible",
    "is_k_noncrossing",
    "is_k_nonnesting",
    "it_jt_biject",
    "jt_frame",
    "lift_block",
    "lr_decode",
    "lr_encode",
    "m132",
    "m213",
    "matrix_of_split_graph",
    "max_antiidentity_order",
    "max_identity_order",
    "nest",
    "nest_weak",
    "occurrences",
    "parse_filling",
    "parse_pattern",
    "phi",
    "psi",
    "run_experiment",
    "split_graph_of_matrix",
    "split_vertex",
    "sums_of",
    "validate_shape",
    "verify_equirestrictive",
]
