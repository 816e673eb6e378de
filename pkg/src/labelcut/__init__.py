"""Minimum label cut (hedge connectivity) toolkit."""

from .errors import (
    BudgetExceeded,
    Disconnected,
    DuplicateEdge,
    EmptyLabelSet,
    LabelCutError,
    NonPositiveWeight,
    NoTerminals,
    ParseError,
    SelfLoop,
)
from .model import (
    CutSolution,
    GraphStats,
    Label,
    LabeledGraph,
    Semantics,
    Variant,
    build_graph,
    compute_stats,
    is_connected,
    is_st_connected,
    remove_labels,
)
from .solvers import SolveConfig, decide_cut_at_most, exact_min_label_cut, greedy_st_label_cut, min_edge_cut
from .transform import TransformReport, operation_k, rainbow_path_transform, verify_theorem1

__all__ = [
    "BudgetExceeded",
    "CutSolution",
    "Disconnected",
    "DuplicateEdge",
    "EmptyLabelSet",
    "GraphStats",
    "Label",
    "LabelCutError",
    "LabeledGraph",
    "NoTerminals",
    "NonPositiveWeight",
    "ParseError",
    "SelfLoop",
    "Semantics",
    "SolveConfig",
    "TransformReport",
    "Variant",
    "build_graph",
    "compute_stats",
    "decide_cut_at_most",
    "exact_min_label_cut",
    "greedy_st_label_cut",
    "is_connected",
    "is_st_connected",
    "min_edge_cut",
    "operation_k",
    "rainbow_path_transform",
    "remove_labels",
    "verify_theorem1",
]
