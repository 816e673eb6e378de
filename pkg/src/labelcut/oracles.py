"""Exhaustive reference answers used to cross-check the real algorithms.

Nothing here is clever on purpose: every function tries all candidates.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations

from .model import LabeledGraph, Semantics, Variant, is_connected, is_st_connected, remove_labels
from .reductions import HittingSetInstance


def brute_min_label_cut(g: LabeledGraph, variant=Variant.GLOBAL, semantics=Semantics.CASCADING):
    """Minimum total weight over all ``2^L`` label subsets that disconnect."""
    variant = Variant(variant)
    best = None
    for mask in range(1 << g.num_labels):
        chosen = [i for i in range(g.num_labels) if mask >> i & 1]
        alive = remove_labels(g, chosen, semantics)
        if variant is Variant.GLOBAL:
            cut = not is_connected(g, alive)
        else:
            cut = not is_st_connected(g, *g.terminals, alive)
        if cut:
            removed = chosen
            if Semantics(semantics) is Semantics.CASCADING:
                removed = _fixpoint(g, chosen)
            w = g.weight_of(removed)
            if best is None or w < best:
                best = w
    return best


def _fixpoint(g, chosen):
    chosen = set(chosen)
    changed = True
    while changed:
        changed = False
        for e in g.edges:
            if e.labels & chosen and not e.labels <= chosen:
                chosen |= e.labels
                changed = True
    return chosen


def brute_min_edge_cut(g: LabeledGraph, s: int, t: int) -> int:
    """Smallest number of edges whose removal separates s from t."""
    every = range(g.m)
    for k in range(g.m + 1):
        for gone in combinations(every, k):
            alive = set(every) - set(gone)
            if not is_st_connected(g, s, t, alive):
                return k
    raise AssertionError("removing all edges separates distinct vertices")


def brute_hitting_set_size(h: HittingSetInstance) -> int:
    """Minimum hitting set size by scanning every element bitmask."""
    subsets = [sum(1 << x for x in s) for s in h.subsets]
    best = h.universe_size
    for mask in range(1 << h.universe_size):
        size = bin(mask).count("1")
        if size < best and all(mask & s for s in subsets):
            best = size
    return best


def hitting_set_classes(max_universe: int = 6, max_subsets: int = 4):
    """One representative of every hitting-set instance up to isomorphism.

    An instance with m subsets is determined, up to renaming elements, by
    the multiset of element membership signatures (m-bit masks; 0 marks an
    unused element).  Signatures are further canonicalized over subset
    reorderings.  Renaming elements or reordering subsets changes neither
    the hitting-set optimum nor the constructed graph's cut value.
    """
    out = []
    for m in range(1, max_subsets + 1):
        perms = list(permutations(range(m)))
        full = (1 << m) - 1
        seen = set()
        for sigs in combinations_with_replacement(range(1 << m), max_universe):
            cover = 0
            for s in sigs:
                cover |= s
            if cover != full:
                continue
            canon = min(
                tuple(sorted(sum((s >> j & 1) << p[j] for j in range(m)) for s in sigs))
                for p in perms
            )
            if canon in seen:
                continue
            seen.add(canon)
            subsets = tuple(
                frozenset(i for i, s in enumerate(canon) if s >> j & 1) for j in range(m)
            )
            out.append(HittingSetInstance(max_universe, subsets))
    return out

