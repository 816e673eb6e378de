"""Hitting set -> minimum label s-t cut, with brute-force cross-checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import BudgetExceeded, ReductionMismatch
from .model import LabeledGraph, Variant, build_graph
from .solvers import SolveConfig, decide_cut_at_most, exact_min_label_cut, min_edge_cut
from .transform import operation_k

HITTING_SET_BUDGET = 24


@dataclass(frozen=True)
class HittingSetInstance:
    universe_size: int
    subsets: tuple
    budget: Optional[int] = None

    def __post_init__(self):
        subsets = tuple(frozenset(s) for s in self.subsets)
        for i, s in enumerate(subsets):
            if not s:
                raise ValueError(f"subset {i} is empty")
            bad = [x for x in s if not 0 <= x < self.universe_size]
            if bad:
                raise ValueError(f"subset {i} has elements outside the universe: {bad}")
        object.__setattr__(self, "subsets", subsets)

    def is_hit_by(self, chosen) -> bool:
        chosen = set(chosen)
        return all(s & chosen for s in self.subsets)


def hitting_set_to_st_label_cut(h: HittingSetInstance) -> LabeledGraph:
    """One internally disjoint s-t path per subset, edges labeled by elements.

    s is vertex 0 and t is vertex 1.  Subset ``S_i`` with sorted elements
    ``x_1 < ... < x_k`` becomes the path ``s, p_1, ..., p_{k-1}, t`` whose
    j-th edge carries label ``x_j``.  A label set separates s from t iff it
    hits every subset.

    Only one path may be the direct edge s-t.  Each further singleton
    subset ``{x}`` becomes ``s, p, t`` with both edges labeled ``x``, which
    keeps the graph simple without changing which label sets cut it.
    """
    edges = []
    nxt = 2
    direct_used = False
    for s_i in h.subsets:
        elems = sorted(s_i)
        if len(elems) == 1 and direct_used:
            elems = elems * 2
        if len(elems) == 1:
            direct_used = True
        chain = [0] + list(range(nxt, nxt + len(elems) - 1)) + [1]
        nxt += len(elems) - 1
        edges += [(chain[j], chain[j + 1], elems[j]) for j in range(len(elems))]
    return build_graph(nxt, edges, num_labels=h.universe_size, terminals=(0, 1))


def brute_force_hitting_set(h: HittingSetInstance) -> frozenset:
    """Minimum hitting set: increasing size, lexicographic within a size."""
    if h.universe_size > HITTING_SET_BUDGET:
        raise BudgetExceeded(h.universe_size, HITTING_SET_BUDGET)
    for k in range(h.universe_size + 1):
        for chosen in combinations(range(h.universe_size), k):
            if h.is_hit_by(chosen):
                return frozenset(chosen)
    raise AssertionError("the full universe always hits nonempty subsets")


@dataclass(frozen=True)
class PipelineResult:
    hitting_set_at_most: bool
    label_cut_at_most: bool
    edge_cut: int
    hitting_optimum: int
    cut_optimum: int


def decision_pipeline_theorem3(h: HittingSetInstance, budget: Optional[int] = None) -> PipelineResult:
    """Answer "hitting set of size <= l?" directly and through the label cut.

    The constructed graph goes through operation K (an identity relabeling
    here, as every edge has one label) before solving, and its min edge
    cut must equal the number of subsets since the paths are edge-disjoint.
    Raises :class:`ReductionMismatch` if any of these checks disagree.
    """
    limit = h.budget if budget is None else budget
    if limit is None:
        raise ValueError("a size bound l is required")
    g = hitting_set_to_st_label_cut(h)
    _, edge_cut = min_edge_cut(g)
    if edge_cut != len(h.subsets):
        raise ReductionMismatch(f"min edge cut {edge_cut} != {len(h.subsets)} paths")
    tg = operation_k(g).transformed_graph
    cfg = SolveConfig(Variant.ST)

    hs = brute_force_hitting_set(h)
    cut = exact_min_label_cut(tg, cfg)
    hs_yes = len(hs) <= limit
    cut_yes = decide_cut_at_most(tg, cfg, limit)
    if hs_yes != cut_yes or len(hs) != cut.total_weight:
        raise ReductionMismatch(
            f"hitting set {len(hs)} vs label cut {cut.total_weight} at l={limit}"
        )
    return PipelineResult(hs_yes, cut_yes, edge_cut, len(hs), int(cut.total_weight))
