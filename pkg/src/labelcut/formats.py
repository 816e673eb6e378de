"""Plain-text instance formats.

Labeled graph::

    # comment
    labelgraph <n> <m> <L>
    terminals <s> <t>          (optional)
    denom <d>                  (optional, default 1)
    name <label-id> <token>    (optional)
    weight <label-id> <w>      (optional; weight is w/d, default 1)
    edge <u> <v> <l>[,<l>...]

Hitting set::

    hittingset <|U|> <m>
    budget <l>                 (optional)
    <element> <element> ...    (one line per subset)
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import GraphError, ParseError
from .model import LabeledGraph, build_graph
from .reductions import HittingSetInstance
from .transform import TransformReport


def _int(tok, lineno, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"{what} must be an integer, got {tok!r}") from None


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse(text: str, require_connected: bool = True) -> LabeledGraph:
    header = None
    terminals = None
    denom = 1
    raw_weights = {}
    names = {}
    edges = []
    last = 0
    for lineno, toks in _content_lines(text):
        last = lineno
        kw = toks[0]
        if header is None:
            if kw != "labelgraph" or len(toks) != 4:
                raise ParseError(lineno, "expected header 'labelgraph <n> <m> <L>'")
            header = tuple(_int(x, lineno, "header field") for x in toks[1:])
            n, m, L = header
            if n < 1 or m < 0 or L < 0:
                raise ParseError(lineno, "header fields out of range")
            continue
        if kw == "terminals" and len(toks) == 3:
            s, t = (_int(x, lineno, "terminal") for x in toks[1:])
            if not (0 <= s < n and 0 <= t < n):
                raise ParseError(lineno, f"terminal out of range for n={n}")
            terminals = (s, t)
        elif kw == "denom" and len(toks) == 2:
            denom = _int(toks[1], lineno, "denominator")
            if denom < 1:
                raise ParseError(lineno, "denominator must be positive")
        elif kw == "name" and len(toks) == 3:
            lab = _int(toks[1], lineno, "label id")
            if not 0 <= lab < L:
                raise ParseError(lineno, f"label id {lab} >= L={L}")
            names[lab] = toks[2]
        elif kw == "weight" and len(toks) == 3:
            lab = _int(toks[1], lineno, "label id")
            if not 0 <= lab < L:
                raise ParseError(lineno, f"label id {lab} >= L={L}")
            w = _int(toks[2], lineno, "weight")
            if w <= 0:
                raise ParseError(lineno, f"weight of label {lab} must be positive")
            raw_weights[lab] = w
        elif kw == "edge" and len(toks) == 4:
            u = _int(toks[1], lineno, "vertex")
            v = _int(toks[2], lineno, "vertex")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(lineno, f"vertex out of range for n={n}")
            labs = [_int(x, lineno, "label id") for x in toks[3].split(",") if x]
            if not labs:
                raise ParseError(lineno, "edge has no labels")
            for lab in labs:
                if not 0 <= lab < L:
                    raise ParseError(lineno, f"label id {lab} >= L={L}")
            edges.append((lineno, (u, v, labs)))
        else:
            raise ParseError(lineno, f"unrecognized line {' '.join(toks)!r}")
    if header is None:
        raise ParseError(last, "missing 'labelgraph' header")
    if len(edges) != m:
        raise ParseError(last, f"header declares {m} edges, found {len(edges)}")
    weights = {lab: Fraction(w, denom) for lab, w in raw_weights.items()}
    try:
        return build_graph(
            n,
            [e for _, e in edges],
            weights,
            names=names,
            num_labels=L,
            terminals=terminals,
            require_connected=require_connected,
        )
    except GraphError as exc:
        idx = getattr(exc, "edge_index", None)
        line = edges[idx][0] if idx is not None else last
        raise ParseError(line, str(exc)) from exc


def emit(g: LabeledGraph) -> str:
    """Canonical text form; ``parse(emit(g)) == g``."""
    out = [f"labelgraph {g.n} {g.m} {g.num_labels}"]
    if g.terminals is not None:
        out.append(f"terminals {g.terminals[0]} {g.terminals[1]}")
    denom = lcm(1, *(lab.weight.denominator for lab in g.labels))
    if denom != 1:
        out.append(f"denom {denom}")
    for lab in g.labels:
        if lab.name is not None:
            out.append(f"name {lab.id} {lab.name}")
    for lab in g.labels:
        if lab.weight != 1:
            out.append(f"weight {lab.id} {int(lab.weight * denom)}")
    for u, v, labs in g.edges:
        out.append(f"edge {u} {v} " + ",".join(str(x) for x in sorted(labs)))
    return "\n".join(out) + "\n"


def emit_report(report: TransformReport) -> str:
    lines = report.provenance_lines()
    lines.append(emit(report.transformed_graph).rstrip("\n"))
    return "\n".join(lines) + "\n"


def parse_hitting_set(text: str) -> HittingSetInstance:
    header = None
    budget = None
    subsets = []
    last = 0
    for lineno, toks in _content_lines(text):
        last = lineno
        if header is None:
            if toks[0] != "hittingset" or len(toks) != 3:
                raise ParseError(lineno, "expected header 'hittingset <|U|> <m>'")
            header = (_int(toks[1], lineno, "|U|"), _int(toks[2], lineno, "m"))
            continue
        if toks[0] == "budget":
            if len(toks) != 2:
                raise ParseError(lineno, "expected 'budget <l>'")
            budget = _int(toks[1], lineno, "budget")
            continue
        elems = [_int(x, lineno, "element") for x in toks]
        bad = [x for x in elems if not 0 <= x < header[0]]
        if bad:
            raise ParseError(lineno, f"element {bad[0]} outside universe of size {header[0]}")
        subsets.append(elems)
    if header is None:
        raise ParseError(last, "missing 'hittingset' header")
    if len(subsets) != header[1]:
        raise ParseError(last, f"header declares {header[1]} subsets, found {len(subsets)}")
    return HittingSetInstance(header[0], tuple(subsets), budget)


def emit_hitting_set(h: HittingSetInstance) -> str:
    out = [f"hittingset {h.universe_size} {len(h.subsets)}"]
    if h.budget is not None:
        out.append(f"budget {h.budget}")
    out += [" ".join(str(x) for x in sorted(s)) for s in h.subsets]
    return "\n".join(out) + "\n"
