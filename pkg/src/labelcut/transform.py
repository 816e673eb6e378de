"""Overlap elimination (operation K) and the rainbow-path edge split.

Operation K merges every group of labels linked through shared edges into a
single weighted label, giving a non-overlapping instance whose weighted
label cuts match the cascading cuts of the input.  The rainbow-path split
replaces a multi-label edge by a path of single-label edges; it is kept
because it does *not* preserve label connectivity, and the tests show it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ProvenanceMismatch, SingleLabelEdge, UnknownEdge
from .model import LabeledGraph, build_graph, compute_stats


class DisjointSet:
    """Union-find over ``0..n-1`` with path halving and union by rank."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        self.parent[y] = x
        if self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        return True

    def groups(self):
        """Blocks as sorted tuples, ordered by their smallest member."""
        blocks = {}
        for x in range(len(self.parent)):
            blocks.setdefault(self.find(x), []).append(x)
        return sorted((tuple(b) for b in blocks.values()), key=lambda b: b[0])


@dataclass(frozen=True)
class TransformReport:
    """Result of :func:`operation_k`.

    ``merged_classes[i]`` became label ``i`` of ``transformed_graph`` and is
    reported under the fresh id ``new_ids[i] == original_num_labels + i``.
    """

    original_num_labels: int
    merged_classes: tuple
    new_ids: tuple
    new_weights: tuple
    transformed_graph: LabeledGraph

    @property
    def provenance(self) -> dict:
        return dict(zip(self.new_ids, self.merged_classes))

    @property
    def class_of(self) -> dict:
        """Original label id -> index of its class in the transformed graph."""
        return {lab: i for i, cls in enumerate(self.merged_classes) for lab in cls}

    def provenance_lines(self) -> list:
        return [
            f"class {nid} {_fmt(w)} := " + " ".join(str(x) for x in cls)
            for nid, w, cls in zip(self.new_ids, self.new_weights, self.merged_classes)
        ]


def _fmt(w: Fraction) -> str:
    return str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


def label_classes(g: LabeledGraph) -> list:
    """Partition of all label ids into classes linked by shared edges."""
    dsu = DisjointSet(g.num_labels)
    for e in g.edges:
        if len(e.labels) > 1:
            first, *rest = e.labels
            for lab in rest:
                dsu.union(first, lab)
    return dsu.groups()


def operation_k(g: LabeledGraph) -> TransformReport:
    """Relabel each class of correlated labels with one fresh weighted label.

    The fresh label's weight is the total weight of its class (the class
    size for unit weights).  Classes are numbered by smallest member, so
    the output is deterministic.  A non-overlapping input yields singleton
    classes and an unchanged graph up to relabeling.
    """
    classes = label_classes(g)
    class_of = {lab: i for i, cls in enumerate(classes) for lab in cls}
    weights = tuple(g.weight_of(cls) for cls in classes)

    names = {}
    for i, cls in enumerate(classes):
        if any(g.labels[x].name is not None for x in cls):
            names[i] = "+".join(g.labels[x].display for x in cls)

    edges = [(e.u, e.v, {class_of[next(iter(e.labels))]}) for e in g.edges]
    tg = build_graph(
        g.n,
        edges,
        dict(enumerate(weights)),
        names=names,
        num_labels=len(classes),
        terminals=g.terminals,
        require_connected=False,
    )
    L = g.num_labels
    return TransformReport(
        original_num_labels=L,
        merged_classes=tuple(frozenset(c) for c in classes),
        new_ids=tuple(range(L, L + len(classes))),
        new_weights=weights,
        transformed_graph=tg,
    )


def rainbow_path_transform(g: LabeledGraph, edge: Union[int, tuple]) -> LabeledGraph:
    """Replace a k-label edge by a path of k single-label edges.

    The path runs through k-1 fresh vertices ``n, n+1, ...`` from the
    edge's first endpoint; edge i of the path carries the i-th smallest
    label of the original edge.
    """
    if isinstance(edge, tuple):
        try:
            eid = g.edge_index(*edge)
        except KeyError:
            raise UnknownEdge(edge) from None
    else:
        eid = edge
        if not 0 <= eid < g.m:
            raise UnknownEdge(eid)
    u, v, labs = g.edges[eid]
    if len(labs) < 2:
        raise SingleLabelEdge(eid)

    labs = sorted(labs)
    k = len(labs)
    chain = [u] + list(range(g.n, g.n + k - 1)) + [v]
    path = [(chain[i], chain[i + 1], {labs[i]}) for i in range(k)]
    edges = [(e.u, e.v, e.labels) for e in g.edges[:eid]] + path
    edges += [(e.u, e.v, e.labels) for e in g.edges[eid + 1 :]]
    return build_graph(
        g.n + k - 1,
        edges,
        {lab.id: lab.weight for lab in g.labels},
        names={lab.id: lab.name for lab in g.labels if lab.name is not None},
        num_labels=g.num_labels,
        terminals=g.terminals,
        require_connected=False,
    )


@dataclass(frozen=True)
class ClauseVerdict:
    name: str
    passed: bool
    detail: str


def verify_theorem1(report: TransformReport, original: LabeledGraph) -> list:
    """Check the three postconditions of operation K mechanically.

    1. every transformed edge carries exactly one label;
    2. every new weight is at most the largest vertex label degree of the
       original, and there are no more new labels than old ones;
    3. the new weights sum to the original total label weight (``|L|``
       for unit weights).
    """
    tg = report.transformed_graph
    members = sorted(x for cls in report.merged_classes for x in cls)
    if members != list(range(original.num_labels)):
        raise ProvenanceMismatch("classes do not partition the original labels")
    if report.original_num_labels != original.num_labels or tg.n != original.n:
        raise ProvenanceMismatch("report size does not match original graph")
    class_of = report.class_of
    for e, te in zip(original.edges, tg.edges):
        if (e.u, e.v) != (te.u, te.v):
            raise ProvenanceMismatch("edge endpoints differ")
        if {class_of[x] for x in e.labels} != set(te.labels):
            raise ProvenanceMismatch("edge relabeling disagrees with classes")
    if tg.m != original.m:
        raise ProvenanceMismatch("edge count differs")

    single = [i for i, e in enumerate(tg.edges) if len(e.labels) != 1]
    bound = compute_stats(original).max_label_degree
    heavy = [(nid, w) for nid, w in zip(report.new_ids, report.new_weights) if w > bound]
    count_ok = tg.num_labels <= original.num_labels
    total_new = sum(report.new_weights, Fraction(0))
    total_old = original.weight_of(range(original.num_labels))

    return [
        ClauseVerdict(
            "one_label_per_edge",
            not single,
            "ok" if not single else f"multi-label edges {single}",
        ),
        ClauseVerdict(
            "weight_bound",
            not heavy and count_ok,
            f"max_label_degree={bound} new_labels={tg.num_labels}<={original.num_labels}"
            + ("" if not heavy else " over: " + " ".join(f"{n}:{_fmt(w)}" for n, w in heavy)),
        ),
        ClauseVerdict(
            "total_weight",
            total_new == total_old,
            f"new={_fmt(total_new)} old={_fmt(total_old)}",
        ),
    ]
