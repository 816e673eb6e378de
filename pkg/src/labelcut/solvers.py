"""Exact and heuristic label-cut solvers, plus a unit-capacity min edge cut."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import networkx as nx

from .errors import BudgetExceeded, NoTerminals, VertexOutOfRange
from .model import (
    CutSolution,
    LabeledGraph,
    Semantics,
    Variant,
    closure,
    component,
    surviving_by_mask,
)
from .transform import label_classes

DEFAULT_BUDGET = 24


@dataclass(frozen=True)
class SolveConfig:
    variant: Variant = Variant.GLOBAL
    semantics: Semantics = Semantics.CASCADING
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "semantics", Semantics(self.semantics))
        if self.budget < 1:
            raise ValueError("budget must be >= 1")


def _terminals(g: LabeledGraph, cfg: SolveConfig):
    if cfg.variant is Variant.GLOBAL:
        return None
    if g.terminals is None:
        raise NoTerminals()
    return g.terminals


def _disconnects(g: LabeledGraph, removed: int, terms) -> bool:
    """True iff removing every edge whose mask meets ``removed`` disconnects."""
    masks = g.edge_masks
    adj = g.adjacency
    start = 0 if terms is None else terms[0]
    seen = [False] * g.n
    seen[start] = True
    stack = [start]
    count = 1
    target = None if terms is None else terms[1]
    while stack:
        x = stack.pop()
        for y, eid in adj[x]:
            if not seen[y] and not masks[eid] & removed:
                if y == target:
                    return False
                seen[y] = True
                count += 1
                stack.append(y)
    if target is None:
        return count < g.n
    return target != start


def st_relevant_edges(g: LabeledGraph, s: int, t: int) -> frozenset:
    """Edge ids lying on at least one simple s-t path.

    An edge is on a simple s-t path exactly when it shares a biconnected
    block with the (possibly virtual) edge s-t.
    """
    if s == t:
        return frozenset()
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for i, (u, v, _) in enumerate(g.edges):
        h.add_edge(u, v, eid=i)
    if not h.has_edge(s, t):
        h.add_edge(s, t, eid=None)
    for block in nx.biconnected_component_edges(h):
        block = list(block)
        if any({a, b} == {s, t} for a, b in block):
            return frozenset(
                h.edges[a, b]["eid"] for a, b in block if h.edges[a, b]["eid"] is not None
            )
    return frozenset()


def _items(g: LabeledGraph, cfg: SolveConfig, terms) -> list:
    """Selectable units as ``(weight, label tuple, mask)``, lightest first.

    Independent semantics selects single labels; cascading selects whole
    label classes, since any selection is closed before removal.  Units
    with no edge that can matter for the target are dropped: they only add
    weight.
    """
    if cfg.semantics is Semantics.CASCADING:
        groups = label_classes(g)
    else:
        groups = [(i,) for i in range(g.num_labels)]
    if terms is None:
        useful = set(range(g.m))
    else:
        useful = st_relevant_edges(g, *terms)
    label_edges = g.label_edges
    items = []
    for grp in groups:
        if not any(e in useful for lab in grp for e in label_edges[lab]):
            continue
        mask = 0
        for lab in grp:
            mask |= 1 << lab
        items.append((g.weight_of(grp), tuple(sorted(grp)), mask))
    items.sort()
    return items


def subsets_by_weight(weights: list) -> Iterator[tuple]:
    """Yield ``(total, index tuple)`` for all subsets, total nondecreasing.

    ``weights`` must be sorted ascending.  Each nonempty subset is reached
    from its parent by appending the next index or bumping the last one.
    """
    yield Fraction(0), ()
    k = len(weights)
    if not k:
        return
    heap = [(weights[0], (0,))]
    while heap:
        total, idx = heapq.heappop(heap)
        yield total, idx
        last = idx[-1]
        if last + 1 < k:
            heapq.heappush(heap, (total + weights[last + 1], idx + (last + 1,)))
            heapq.heappush(
                heap, (total - weights[last] + weights[last + 1], idx[:-1] + (last + 1,))
            )


def _search(g: LabeledGraph, cfg: SolveConfig, limit=None):
    if g.num_labels > cfg.budget:
        raise BudgetExceeded(g.num_labels, cfg.budget)
    terms = _terminals(g, cfg)
    items = _items(g, cfg, terms)
    weights = [w for w, _, _ in items]
    best = None
    for total, idx in subsets_by_weight(weights):
        if limit is not None and total > limit:
            break
        if best is not None and total > best[0]:
            break
        mask = 0
        for i in idx:
            mask |= items[i][2]
        if _disconnects(g, mask, terms):
            labels = tuple(sorted(lab for i in idx for lab in items[i][1]))
            if best is None or labels < best[1]:
                best = (total, labels, mask)
    return best, terms


def _solution(g, cfg, best, terms, method="exact") -> CutSolution:
    total, labels, mask = best
    if terms is None:
        witness = frozenset(component(g, 0, surviving_by_mask(g, mask)))
    else:
        witness = terms
    return CutSolution(
        labels=frozenset(labels),
        total_weight=total,
        witness=witness,
        variant=cfg.variant,
        semantics=cfg.semantics,
        method=method,
    )


def exact_min_label_cut(g: LabeledGraph, cfg: SolveConfig = SolveConfig()) -> CutSolution:
    """Minimum-weight label cut by weight-ordered subset enumeration.

    Among minimum-weight cuts the lexicographically smallest label tuple is
    returned.  Raises :class:`BudgetExceeded` above ``cfg.budget`` labels.
    """
    best, terms = _search(g, cfg)
    if best is None:
        # only when s == t: nothing separates a vertex from itself
        raise ValueError("no label cut exists for this target")
    return _solution(g, cfg, best, terms)


def decide_cut_at_most(g: LabeledGraph, cfg: SolveConfig, p) -> bool:
    """True iff some label cut has total weight at most ``p``."""
    if g.num_labels > cfg.budget:
        raise BudgetExceeded(g.num_labels, cfg.budget)
    terms = _terminals(g, cfg)
    items = _items(g, cfg, terms)
    for total, idx in subsets_by_weight([w for w, _, _ in items]):
        if total > p:
            return False
        mask = 0
        for i in idx:
            mask |= items[i][2]
        if _disconnects(g, mask, terms):
            return True
    return False


def _shortest_path_edges(g: LabeledGraph, s: int, t: int, removed: int) -> Optional[list]:
    masks = g.edge_masks
    prev = {s: None}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            break
        for y, eid in g.adjacency[x]:
            if y not in prev and not masks[eid] & removed:
                prev[y] = (x, eid)
                queue.append(y)
    if t not in prev:
        return None
    path = []
    x = t
    while prev[x] is not None:
        x, eid = prev[x]
        path.append(eid)
    return path[::-1]


def greedy_st_label_cut(g: LabeledGraph, cfg: SolveConfig = SolveConfig(Variant.ST)) -> CutSolution:
    """Heuristic s-t label cut; no approximation ratio is claimed.

    While s and t are connected: take a shortest surviving s-t path and
    remove the label on it that kills the most surviving edges per unit of
    weight (ties to the smaller label id).  Under cascading semantics a
    label's whole class goes with it.
    """
    if g.terminals is None:
        raise NoTerminals()
    s, t = g.terminals
    if s == t:
        raise ValueError("no label cut exists for this target")
    masks = g.edge_masks
    removed = 0
    removed_labels = set()
    while True:
        path = _shortest_path_edges(g, s, t, removed)
        if path is None:
            break
        best = None
        for lab in sorted(set().union(*(g.edges[e].labels for e in path))):
            if cfg.semantics is Semantics.CASCADING:
                group = closure(g, [lab])
            else:
                group = frozenset([lab])
            group = group - removed_labels
            gmask = sum(1 << x for x in group)
            killed = sum(1 for m in masks if m & gmask and not m & removed)
            score = Fraction(killed) / g.weight_of(group)
            if best is None or score > best[0]:
                best = (score, group, gmask)
        removed |= best[2]
        removed_labels |= best[1]
    labels = tuple(sorted(removed_labels))
    greedy_cfg = SolveConfig(Variant.ST, cfg.semantics, cfg.budget)
    return _solution(g, greedy_cfg, (g.weight_of(labels), labels, removed), (s, t), "greedy")


def min_edge_cut(g: LabeledGraph, s: Optional[int] = None, t: Optional[int] = None):
    """Minimum s-t edge cut ignoring labels, via shortest augmenting paths.

    Returns ``(edge id frozenset, value)``; value equals the maximum number
    of edge-disjoint s-t paths.
    """
    if s is None or t is None:
        if g.terminals is None:
            raise NoTerminals()
        s, t = g.terminals
    for x in (s, t):
        if not 0 <= x < g.n:
            raise VertexOutOfRange(x, g.n)
    if s == t:
        raise ValueError("s and t must differ")
    residual = [dict() for _ in range(g.n)]
    for u, v, _ in g.edges:
        residual[u][v] = 1
        residual[v][u] = 1
    flow = 0
    while True:
        prev = {s: None}
        queue = deque([s])
        while queue and t not in prev:
            x = queue.popleft()
            for y, cap in residual[x].items():
                if cap > 0 and y not in prev:
                    prev[y] = x
                    queue.append(y)
        if t not in prev:
            break
        y = t
        while prev[y] is not None:
            x = prev[y]
            residual[x][y] -= 1
            residual[y][x] += 1
            y = x
        flow += 1
    side = set(prev)
    cut = frozenset(i for i, (u, v, _) in enumerate(g.edges) if (u in side) != (v in side))
    assert len(cut) == flow
    return cut, flow
