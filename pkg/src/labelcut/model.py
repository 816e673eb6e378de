"""Labeled graph data model, label removal, connectivity and label statistics.

Labels are dense integer ids ``0..L-1``; each carries a positive rational
weight (default 1) and an optional display name.  Edges are undirected and
carry a nonempty set of label ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    EmptyLabelSet,
    NonPositiveWeight,
    SelfLoop,
    UnknownLabel,
    VertexOutOfRange,
)


class Semantics(str, Enum):
    """How removing a label propagates.

    INDEPENDENT removes exactly the edges carrying a selected label.
    CASCADING first closes the selection under "shares an edge with a
    selected label", then removes as INDEPENDENT.
    """

    INDEPENDENT = "independent"
    CASCADING = "cascading"


class Variant(str, Enum):
    GLOBAL = "global"
    ST = "st"


@dataclass(frozen=True)
class Label:
    id: int
    weight: Fraction = Fraction(1)
    name: Optional[str] = None

    @property
    def display(self) -> str:
        return self.name if self.name is not None else str(self.id)


class Edge(NamedTuple):
    u: int
    v: int
    labels: frozenset


@dataclass(frozen=True)
class LabeledGraph:
    """Immutable undirected simple graph with labeled edges.

    Construct through :func:`build_graph`, which validates.
    """

    n: int
    edges: tuple
    labels: tuple
    terminals: Optional[tuple] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_labels(self) -> int:
        return len(self.labels)

    @property
    def non_overlapping(self) -> bool:
        return all(len(e.labels) == 1 for e in self.edges)

    @cached_property
    def weights(self) -> tuple:
        return tuple(lab.weight for lab in self.labels)

    @cached_property
    def edge_masks(self) -> tuple:
        """Per-edge label bitmask."""
        out = []
        for e in self.edges:
            mask = 0
            for lab in e.labels:
                mask |= 1 << lab
            out.append(mask)
        return tuple(out)

    @cached_property
    def adjacency(self) -> tuple:
        """Per-vertex tuple of ``(neighbor, edge id)`` pairs."""
        adj = [[] for _ in range(self.n)]
        for i, (u, v, _) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def label_edges(self) -> tuple:
        """Per-label tuple of edge ids carrying it."""
        out = [[] for _ in range(self.num_labels)]
        for i, e in enumerate(self.edges):
            for lab in e.labels:
                out[lab].append(i)
        return tuple(tuple(x) for x in out)

    @cached_property
    def label_neighbors(self) -> tuple:
        """Per-label frozenset of other labels sharing at least one edge with it."""
        out = [set() for _ in range(self.num_labels)]
        for e in self.edges:
            for a in e.labels:
                out[a].update(e.labels)
        for a, s in enumerate(out):
            s.discard(a)
        return tuple(frozenset(s) for s in out)

    def weight_of(self, labels: Iterable[int]) -> Fraction:
        w = self.weights
        return sum((w[i] for i in labels), Fraction(0))

    def names_of(self, labels: Iterable[int]) -> list:
        return [self.labels[i].display for i in sorted(labels)]

    def edge_index(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        for i, e in enumerate(self.edges):
            if (min(e.u, e.v), max(e.u, e.v)) == key:
                return i
        raise KeyError(f"no edge ({u}, {v})")


@dataclass(frozen=True)
class CutSolution:
    """A label set whose removal disconnects the witness.

    ``witness`` is the vertex set of one side (global variant) or the
    separated terminal pair (s-t variant).  ``labels`` is the set of labels
    actually removed; under cascading semantics it is closed.
    """

    labels: frozenset
    total_weight: Fraction
    witness: object
    variant: Variant = Variant.GLOBAL
    semantics: Semantics = Semantics.CASCADING
    method: str = "exact"


@dataclass(frozen=True)
class GraphStats:
    label_degree: tuple
    min_label_degree: int
    max_label_degree: int
    label_frequency: tuple
    max_label_frequency: int
    degree: tuple = field(default=())


def _as_weight(label, w) -> Fraction:
    try:
        fw = Fraction(w)
    except (TypeError, ValueError, ZeroDivisionError):
        raise NonPositiveWeight(label, w) from None
    if fw <= 0:
        raise NonPositiveWeight(label, w)
    return fw


def build_graph(
    n: int,
    edge_list: Sequence,
    weights: Optional[Mapping] = None,
    *,
    names: Optional[Mapping] = None,
    num_labels: Optional[int] = None,
    terminals: Optional[tuple] = None,
    require_connected: bool = True,
) -> LabeledGraph:
    """Validate ``(u, v, labels)`` triples and return a :class:`LabeledGraph`.

    ``num_labels`` defaults to one more than the largest label used, so
    trailing unused labels must be declared explicitly.
    """
    if n < 1:
        raise VertexOutOfRange(n, n)
    edges = []
    seen = {}
    max_label = -1
    for i, (u, v, labs) in enumerate(edge_list):
        if isinstance(labs, int):
            labs = (labs,)
        labs = frozenset(int(x) for x in labs)
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(x, n)
        if u == v:
            raise SelfLoop(i, u)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(i, u, v)
        seen[key] = i
        if not labs:
            raise EmptyLabelSet(i)
        for lab in labs:
            if lab < 0:
                raise UnknownLabel(lab, f"edge {i}")
        max_label = max(max_label, max(labs))
        edges.append(Edge(int(u), int(v), labs))

    if num_labels is None:
        num_labels = max_label + 1
    if max_label >= num_labels:
        raise UnknownLabel(max_label, f"only {num_labels} labels declared")

    weights = dict(weights or {})
    names = dict(names or {})
    for lab in list(weights) + list(names):
        if not 0 <= lab < num_labels:
            raise UnknownLabel(lab, "weight/name table")
    labels = tuple(
        Label(i, _as_weight(i, weights.get(i, 1)), names.get(i))
        for i in range(num_labels)
    )

    if terminals is not None:
        s, t = terminals
        for x in (s, t):
            if not 0 <= x < n:
                raise VertexOutOfRange(x, n)
        terminals = (int(s), int(t))

    g = LabeledGraph(n, tuple(edges), labels, terminals)
    if require_connected:
        reach = component(g, 0)
        if len(reach) != n:
            raise Disconnected(min(set(range(n)) - reach))
    return g


def closure(g: LabeledGraph, selected: Iterable[int]) -> frozenset:
    """Close a label set under "shares an edge with a selected label"."""
    out = set()
    queue = deque()
    for lab in selected:
        if not 0 <= lab < g.num_labels:
            raise UnknownLabel(lab)
        if lab not in out:
            out.add(lab)
            queue.append(lab)
    nbrs = g.label_neighbors
    while queue:
        a = queue.popleft()
        for b in nbrs[a]:
            if b not in out:
                out.add(b)
                queue.append(b)
    return frozenset(out)


def remove_labels(
    g: LabeledGraph,
    selected: Iterable[int],
    semantics: Semantics = Semantics.CASCADING,
) -> frozenset:
    """Return the ids of edges that survive removing ``selected``."""
    semantics = Semantics(semantics)
    selected = frozenset(selected)
    for lab in selected:
        if not 0 <= lab < g.num_labels:
            raise UnknownLabel(lab)
    if semantics is Semantics.CASCADING:
        selected = closure(g, selected)
    return frozenset(i for i, e in enumerate(g.edges) if not (e.labels & selected))


def surviving_by_mask(g: LabeledGraph, removed_mask: int) -> list:
    return [i for i, m in enumerate(g.edge_masks) if not m & removed_mask]


def component(g: LabeledGraph, start: int, surviving: Optional[Iterable[int]] = None) -> set:
    """Vertices reachable from ``start`` over the surviving edges."""
    if not 0 <= start < g.n:
        raise VertexOutOfRange(start, g.n)
    alive = None if surviving is None else set(surviving)
    seen = {start}
    queue = deque([start])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        for y, eid in adj[x]:
            if y not in seen and (alive is None or eid in alive):
                seen.add(y)
                queue.append(y)
    return seen


def is_connected(g: LabeledGraph, surviving: Optional[Iterable[int]] = None) -> bool:
    return len(component(g, 0, surviving)) == g.n


def is_st_connected(
    g: LabeledGraph, s: int, t: int, surviving: Optional[Iterable[int]] = None
) -> bool:
    if not 0 <= t < g.n:
        raise VertexOutOfRange(t, g.n)
    return t in component(g, s, surviving)


def compute_stats(g: LabeledGraph) -> GraphStats:
    incident = [set() for _ in range(g.n)]
    degree = [0] * g.n
    freq = [0] * g.num_labels
    for u, v, labs in g.edges:
        incident[u].update(labs)
        incident[v].update(labs)
        degree[u] += 1
        degree[v] += 1
        for lab in labs:
            freq[lab] += 1
    dl = tuple(len(s) for s in incident)
    return GraphStats(
        label_degree=dl,
        min_label_degree=min(dl),
        max_label_degree=max(dl),
        label_frequency=tuple(freq),
        max_label_frequency=max(freq, default=0),
        degree=tuple(degree),
    )


def incident_labels(g: LabeledGraph, v: int) -> frozenset:
    out = set()
    for _, eid in g.adjacency[v]:
        out |= g.edges[eid].labels
    return frozenset(out)
