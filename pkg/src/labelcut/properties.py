"""Label-count and hedge vertex-cut set functions and their (non-)submodularity.

``g(E')`` counts the distinct labels on an edge subset; it is a coverage
function and therefore submodular.  ``f(A)`` counts the labels (or label
classes) with an edge crossing the vertex cut ``(A, V - A)``; it is not
submodular in general, and :func:`find_f_submodularity_violation` produces
a concrete witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

import numpy as np

from .errors import UnknownEdge, VertexOutOfRange
from .model import LabeledGraph, Semantics, build_graph, closure, incident_labels, is_connected
from .transform import label_classes


@dataclass(frozen=True)
class PropertyVerdict:
    name: str
    passed: bool
    witness: str = ""

    def line(self) -> str:
        out = f"PROPERTY {self.name} {'PASS' if self.passed else 'FAIL'}"
        return f"{out} {self.witness}" if self.witness else out


def eval_g(g: LabeledGraph, edge_ids: Iterable[int]) -> int:
    seen = set()
    for eid in edge_ids:
        if not 0 <= eid < g.m:
            raise UnknownEdge(eid)
        seen |= g.edges[eid].labels
    return len(seen)


def _g_table(g: LabeledGraph) -> np.ndarray:
    """``g`` for every edge subset, indexed by edge bitmask."""
    m = g.m
    label_mask = [0] * (1 << m)
    masks = g.edge_masks
    for s in range(1, 1 << m):
        low = s & -s
        label_mask[s] = label_mask[s ^ low] | masks[low.bit_length() - 1]
    return np.fromiter((bin(x).count("1") for x in label_mask), dtype=np.int64, count=1 << m)


@dataclass(frozen=True)
class SubmodularityVerdict:
    holds: bool
    pairs_checked: int
    exhaustive: bool
    violation: Optional[tuple] = None


def _bits(mask: int) -> frozenset:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def check_g_submodular(
    g: LabeledGraph, exhaustive_limit: int = 12, samples: int = 10_000, seed: int = 0
) -> SubmodularityVerdict:
    """Test ``g(E')+g(E'') >= g(E' | E'') + g(E' & E'')``.

    All ordered pairs of edge subsets are tried when ``m <= exhaustive_limit``;
    otherwise ``samples`` uniformly random pairs drawn from ``seed``.
    """
    m = g.m
    if m <= exhaustive_limit:
        table = _g_table(g)
        every = np.arange(1 << m)
        for a in range(1 << m):
            bad = table[a] + table < table[a | every] + table[a & every]
            if bad.any():
                b = int(np.argmax(bad))
                return SubmodularityVerdict(False, (a + 1) << m, True, (_bits(a), _bits(b)))
        return SubmodularityVerdict(True, 1 << (2 * m), True)

    rng = random.Random(seed)
    for k in range(samples):
        a = rng.getrandbits(m)
        b = rng.getrandbits(m)
        ea, eb = _bits(a), _bits(b)
        if eval_g(g, ea) + eval_g(g, eb) < eval_g(g, ea | eb) + eval_g(g, ea & eb):
            return SubmodularityVerdict(False, k + 1, False, (ea, eb))
    return SubmodularityVerdict(True, samples, False)


def _class_index(g: LabeledGraph, mode: str) -> list:
    if mode == "auto":
        mode = "raw" if g.non_overlapping else "merged"
    if mode == "raw":
        return list(range(g.num_labels))
    if mode != "merged":
        raise ValueError(f"unknown f mode {mode!r}")
    idx = [0] * g.num_labels
    for i, cls in enumerate(label_classes(g)):
        for lab in cls:
            idx[lab] = i
    return idx


def eval_f(g: LabeledGraph, vertices: Iterable[int], mode: str = "auto") -> int:
    """Number of labels with an edge crossing ``(A, V - A)``.

    ``mode`` is ``"raw"`` (count labels), ``"merged"`` (count label classes
    linked by shared edges) or ``"auto"`` (merged iff the graph has overlaps).
    """
    side = set(vertices)
    for v in side:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(v, g.n)
    idx = _class_index(g, mode)
    hit = set()
    for u, v, labs in g.edges:
        if (u in side) != (v in side):
            hit.update(idx[x] for x in labs)
    return len(hit)


def _f_table(g: LabeledGraph, mode: str = "auto") -> list:
    idx = _class_index(g, mode)
    classes = [frozenset(idx[x] for x in e.labels) for e in g.edges]
    out = []
    for a in range(1 << g.n):
        hit = set()
        for (u, v, _), c in zip(g.edges, classes):
            if (a >> u & 1) != (a >> v & 1):
                hit |= c
        out.append(len(hit))
    return out


def check_f_symmetric(g: LabeledGraph, mode: str = "auto") -> bool:
    full = (1 << g.n) - 1
    table = _f_table(g, mode)
    return table[0] == 0 and all(table[a] == table[full ^ a] for a in range(1 << g.n))


@dataclass(frozen=True)
class FViolation:
    """A graph and vertex sets with ``f(A)+f(B) < f(A|B)+f(A&B)``."""

    graph: LabeledGraph
    a: frozenset
    b: frozenset
    f_a: int
    f_b: int
    f_union: int
    f_inter: int

    @property
    def deficit(self) -> int:
        return self.f_union + self.f_inter - self.f_a - self.f_b

    def describe(self) -> str:
        edges = " ".join(
            f"{u}-{v}:" + ",".join(map(str, sorted(labs))) for u, v, labs in self.graph.edges
        )
        return (
            f"graph={edges} A={sorted(self.a)} B={sorted(self.b)} "
            f"f(A)+f(B)={self.f_a}+{self.f_b} < f(AuB)+f(AnB)={self.f_union}+{self.f_inter}"
        )


def _restricted_growth(length: int, max_blocks: int) -> Iterator[tuple]:
    def rec(prefix, used):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for x in range(min(used + 1, max_blocks)):
            prefix.append(x)
            yield from rec(prefix, max(used, x + 1))
            prefix.pop()

    yield from rec([], 0)


def candidate_graphs(
    max_vertices: int = 5, max_labels: int = 4, max_edges: int = 8, distinct_labels: bool = False
) -> Iterator[LabeledGraph]:
    """Connected single-label-per-edge graphs in canonical order.

    Order: vertex count, edge count, edge set (lexicographic), then label
    assignment as a restricted growth string.  With ``distinct_labels``
    every edge gets its own label, which turns ``f`` into the plain cut
    function.
    """
    for n in range(2, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        for m in range(n - 1, min(max_edges, len(pairs)) + 1):
            for chosen in combinations(pairs, m):
                probe = build_graph(n, [(u, v, 0) for u, v in chosen], require_connected=False)
                if not is_connected(probe):
                    continue
                if distinct_labels:
                    labelings = [tuple(range(m))]
                else:
                    labelings = _restricted_growth(m, max_labels)
                for labs in labelings:
                    yield build_graph(n, [(u, v, x) for (u, v), x in zip(chosen, labs)])


def _first_violation(g: LabeledGraph, pattern: Optional[tuple], mode: str):
    table = _f_table(g, mode)
    size = 1 << g.n
    if pattern is None:
        for a in range(size):
            for b in range(a + 1, size):
                if table[a] + table[b] < table[a | b] + table[a & b]:
                    return a, b
        return None
    want_a, want_ab, want_ac, want_abc = pattern
    for x, y, z in _ordered_triples(g.n):
        a = 1 << x
        ab, ac = a | 1 << y, a | 1 << z
        if (table[a], table[ab], table[ac], table[ab | ac]) == (want_a, want_ab, want_ac, want_abc):
            return ab, ac
    return None


def _ordered_triples(n):
    for x in range(n):
        for y in range(n):
            for z in range(y + 1, n):
                if x not in (y, z):
                    yield x, y, z


def find_f_submodularity_violation(
    max_vertices: int = 5,
    max_labels: int = 4,
    max_edges: int = 8,
    pattern: Optional[tuple] = None,
    distinct_labels: bool = False,
    mode: str = "auto",
) -> Optional[FViolation]:
    """First graph in canonical order on which ``f`` fails submodularity.

    ``pattern`` optionally pins ``(f({a}), f({a,b}), f({a,c}), f({a,b,c}))``;
    the witness is then ``A={a,b}``, ``B={a,c}``.  Returns None when nothing
    is found within the bounds.
    """
    for g in candidate_graphs(max_vertices, max_labels, max_edges, distinct_labels):
        hit = _first_violation(g, pattern, mode)
        if hit is None:
            continue
        a, b = (_bits(x) for x in hit)
        return FViolation(
            graph=g,
            a=a,
            b=b,
            f_a=eval_f(g, a, mode),
            f_b=eval_f(g, b, mode),
            f_union=eval_f(g, a | b, mode),
            f_inter=eval_f(g, a & b, mode),
        )
    return None


def degree_bound(g: LabeledGraph, semantics: Semantics = Semantics.INDEPENDENT):
    """Weight of the cheapest way to isolate one vertex.

    Under independent semantics this is the smallest total weight of the
    labels incident to a vertex, i.e. ``min_v D_L(v)`` for unit weights.
    Under cascading semantics the incident labels are closed first.
    """
    best = None
    for v in range(g.n):
        labs = incident_labels(g, v)
        if Semantics(semantics) is Semantics.CASCADING:
            labs = closure(g, labs)
        w = g.weight_of(labs)
        if best is None or w < best:
            best = w
    return best
