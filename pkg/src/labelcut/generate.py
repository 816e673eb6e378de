"""Seeded random instance generation."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .model import LabeledGraph, build_graph


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    m: int
    num_labels: int
    overlap_prob: float = 0.0
    weight_range: tuple = (1, 1)
    seed: int = 0
    terminals: bool = True


def generate(cfg: GeneratorConfig) -> LabeledGraph:
    """Random connected simple labeled graph, reproducible from ``cfg.seed``.

    A random spanning tree is completed with uniformly chosen extra edges.
    Every edge gets one uniform label; while a coin with probability
    ``overlap_prob`` comes up heads another distinct label is added.
    Integer label weights are drawn uniformly from ``weight_range``.
    Terminals, if requested, are two distinct uniformly chosen vertices.
    """
    n, m, L = cfg.n, cfg.m, cfg.num_labels
    if n < 1 or L < 1:
        raise ValueError("need n >= 1 and at least one label")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise ValueError(f"m={m} infeasible for a connected simple graph on n={n}")
    if not 0.0 <= cfg.overlap_prob < 1.0:
        raise ValueError("overlap_prob must lie in [0, 1)")
    lo, hi = cfg.weight_range
    if not 1 <= lo <= hi:
        raise ValueError("weight_range must satisfy 1 <= lo <= hi")

    rng = random.Random(cfg.seed)
    order = list(range(n))
    rng.shuffle(order)
    pairs = []
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        pairs.append((min(a, b), max(a, b)))
    present = set(pairs)
    rest = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in present]
    pairs += rng.sample(rest, m - len(pairs))

    edges = []
    for a, b in pairs:
        labs = {rng.randrange(L)}
        while len(labs) < L and rng.random() < cfg.overlap_prob:
            labs.add(rng.choice([x for x in range(L) if x not in labs]))
        edges.append((a, b, labs))
    weights = {i: rng.randint(lo, hi) for i in range(L)}
    terminals: Optional[tuple] = None
    if cfg.terminals and n >= 2:
        s, t = rng.sample(range(n), 2)
        terminals = (s, t)
    return build_graph(n, edges, weights, num_labels=L, terminals=terminals)
