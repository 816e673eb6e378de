from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from labelcut import (
    BudgetExceeded,
    NoTerminals,
    Semantics,
    SolveConfig,
    Variant,
    build_graph,
    compute_stats,
    decide_cut_at_most,
    exact_min_label_cut,
    greedy_st_label_cut,
    is_connected,
    is_st_connected,
    min_edge_cut,
    remove_labels,
)
from labelcut.oracles import brute_min_edge_cut, brute_min_label_cut
from labelcut.properties import degree_bound
from labelcut.solvers import st_relevant_edges, subsets_by_weight

from .conftest import labeled_graphs

GLOBAL = SolveConfig(Variant.GLOBAL)
ST = SolveConfig(Variant.ST)


def _disconnects(g, labels, variant, semantics):
    alive = remove_labels(g, labels, semantics)
    if Variant(variant) is Variant.GLOBAL:
        return not is_connected(g, alive)
    return not is_st_connected(g, *g.terminals, alive)


def test_single_edge(single_edge):
    for cfg in (GLOBAL, ST):
        sol = exact_min_label_cut(single_edge, cfg)
        assert sol.labels == {0} and sol.total_weight == 1
    assert exact_min_label_cut(single_edge, GLOBAL).witness == {0}
    assert exact_min_label_cut(single_edge, ST).witness == (0, 1)


def test_two_paths_need_both_labels(two_paths):
    for cfg in (GLOBAL, ST):
        sol = exact_min_label_cut(two_paths, cfg)
        assert sol.labels == {0, 1} and sol.total_weight == 2


def test_figure1_cascading_cut(figure1):
    sol = exact_min_label_cut(figure1, SolveConfig(Variant.GLOBAL, Semantics.CASCADING))
    assert sol.total_weight == 3 and sol.labels == {0, 1, 2}


def test_lexicographic_tie_break():
    triangle = build_graph(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])
    assert exact_min_label_cut(triangle).labels == {0, 1}


def test_weighted_prefers_light_labels():
    triangle = build_graph(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)], {0: 5})
    sol = exact_min_label_cut(triangle)
    assert sol.labels == {1, 2} and sol.total_weight == 2


def test_decide(single_edge, two_paths, figure1):
    assert decide_cut_at_most(single_edge, GLOBAL, 1)
    assert not decide_cut_at_most(two_paths, GLOBAL, 1)
    assert not decide_cut_at_most(figure1, GLOBAL, 2)
    assert decide_cut_at_most(figure1, GLOBAL, 3)


def test_budget_and_terminals():
    wide = build_graph(2, [(0, 1, set(range(25)))])
    with pytest.raises(BudgetExceeded):
        exact_min_label_cut(wide)
    g = build_graph(2, [(0, 1, 0)])
    with pytest.raises(NoTerminals):
        exact_min_label_cut(g, ST)
    with pytest.raises(NoTerminals):
        greedy_st_label_cut(g)
    with pytest.raises(NoTerminals):
        min_edge_cut(g)
    with pytest.raises(ValueError):
        SolveConfig(budget=0)


def test_subsets_by_weight_order():
    weights = [Fraction(1), Fraction(1), Fraction(2), Fraction(3)]
    seen = list(subsets_by_weight(weights))
    totals = [t for t, _ in seen]
    assert totals == sorted(totals)
    assert sorted(idx for _, idx in seen) == sorted(
        c for k in range(5) for c in combinations(range(4), k)
    )
    assert all(t == sum(weights[i] for i in idx) for t, idx in seen)


def test_st_relevant_edges_excludes_dangling_parts():
    # 0-1-2 path with a pendant 1-3 and a triangle hanging off 2
    g = build_graph(
        6, [(0, 1, 0), (1, 2, 1), (1, 3, 2), (2, 4, 3), (4, 5, 4), (2, 5, 5)], terminals=(0, 2)
    )
    assert st_relevant_edges(g, 0, 2) == {0, 1}


def test_greedy_simple_cases(single_edge, two_paths):
    assert greedy_st_label_cut(single_edge).labels == {0}
    sol = greedy_st_label_cut(two_paths)
    assert sol.labels == {0, 1} and sol.method == "greedy"


def test_min_edge_cut_examples(single_edge):
    assert min_edge_cut(single_edge)[1] == 1
    for k in range(1, 5):
        # k internally disjoint s-t paths of length 2 through vertices 2..k+1
        edges = [(0, 2 + i, i) for i in range(k)] + [(2 + i, 1, k + i) for i in range(k)]
        g = build_graph(k + 2, edges, terminals=(0, 1))
        cut, value = min_edge_cut(g)
        assert value == k == len(cut)
        assert not is_st_connected(g, 0, 1, set(range(g.m)) - cut)


@settings(max_examples=200, deadline=None)
@given(labeled_graphs(max_n=6, max_labels=6, weighted=True), st.sampled_from(list(Semantics)))
def test_exact_matches_brute_force(g, semantics):
    for variant in Variant:
        sol = exact_min_label_cut(g, SolveConfig(variant, semantics))
        assert sol.total_weight == brute_min_label_cut(g, variant, semantics)
        assert sol.total_weight == g.weight_of(sol.labels)
        assert _disconnects(g, sol.labels, variant, semantics)
        assert decide_cut_at_most(g, SolveConfig(variant, semantics), sol.total_weight)
        below = sol.total_weight - Fraction(1, 100)
        assert not decide_cut_at_most(g, SolveConfig(variant, semantics), below)


@settings(max_examples=200, deadline=None)
@given(labeled_graphs(max_n=7, max_labels=6), st.data())
def test_adding_labels_keeps_cut_feasible(g, data):
    sol = exact_min_label_cut(g, GLOBAL)
    extra = data.draw(st.sets(st.integers(0, g.num_labels - 1)))
    assert _disconnects(g, sol.labels | extra, Variant.GLOBAL, Semantics.CASCADING)


@settings(max_examples=200, deadline=None)
@given(labeled_graphs(max_n=7, max_labels=6))
def test_independent_cut_within_label_degree(g):
    cut = exact_min_label_cut(g, SolveConfig(Variant.GLOBAL, Semantics.INDEPENDENT))
    assert cut.total_weight <= compute_stats(g).min_label_degree
    assert degree_bound(g) == compute_stats(g).min_label_degree


@settings(max_examples=200, deadline=None)
@given(labeled_graphs(max_n=7, max_labels=6, weighted=True))
def test_cascading_cut_within_closed_degree_bound(g):
    cut = exact_min_label_cut(g, GLOBAL)
    assert cut.total_weight <= degree_bound(g, Semantics.CASCADING)


def test_cascading_cut_can_exceed_label_degree():
    # vertex 0 sees only A, but A drags B along
    g = build_graph(3, [(0, 1, {0}), (1, 2, {0, 1})])
    assert compute_stats(g).min_label_degree == 1
    assert exact_min_label_cut(g, GLOBAL).total_weight == 2
    assert exact_min_label_cut(g, SolveConfig(semantics=Semantics.INDEPENDENT)).total_weight == 1


@settings(max_examples=200, deadline=None)
@given(labeled_graphs(max_n=7, max_labels=6, weighted=True), st.sampled_from(list(Semantics)))
def test_greedy_feasible_and_no_better_than_exact(g, semantics):
    cfg = SolveConfig(Variant.ST, semantics)
    greedy = greedy_st_label_cut(g, cfg)
    assert _disconnects(g, greedy.labels, Variant.ST, semantics)
    assert greedy.total_weight >= exact_min_label_cut(g, cfg).total_weight
    assert len(greedy.labels) <= g.num_labels


@settings(max_examples=200, deadline=None)
@given(labeled_graphs(max_n=8, max_extra=6))
def test_min_edge_cut_matches_brute_force(g):
    s, t = g.terminals
    assert min_edge_cut(g)[1] == brute_min_edge_cut(g, s, t)


@settings(max_examples=100, deadline=None)
@given(labeled_graphs(max_n=7, max_extra=5))
def test_edge_cut_equals_label_cut_with_unique_labels(g):
    unique = build_graph(g.n, [(u, v, i) for i, (u, v, _) in enumerate(g.edges)],
                         terminals=g.terminals)
    assert exact_min_label_cut(unique, ST).total_weight == min_edge_cut(unique)[1]
