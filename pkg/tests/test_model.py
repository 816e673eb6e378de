from itertools import combinations

import pytest
from hypothesis import given, settings

from labelcut import (
    Disconnected,
    DuplicateEdge,
    EmptyLabelSet,
    NonPositiveWeight,
    SelfLoop,
    Semantics,
    build_graph,
    compute_stats,
    is_connected,
    is_st_connected,
    remove_labels,
)
from labelcut.errors import UnknownLabel, VertexOutOfRange
from labelcut.model import closure

from .conftest import labeled_graphs


def test_minimal_graph_is_non_overlapping():
    g = build_graph(2, [(0, 1, {0})])
    assert g.n == 2 and g.m == 1 and g.num_labels == 1
    assert g.non_overlapping


def test_figure1_has_triple_labeled_edge(figure1):
    assert not figure1.non_overlapping
    assert figure1.edges[0].labels == {0, 1, 2}


@pytest.mark.parametrize(
    "n, edges, weights, exc, attr, value",
    [
        (3, [(0, 1, {0}), (1, 0, {1})], None, DuplicateEdge, "edge_index", 1),
        (2, [(0, 0, {0}), (0, 1, {0})], None, SelfLoop, "vertex", 0),
        (2, [(0, 1, set())], None, EmptyLabelSet, "edge_index", 0),
        (3, [(0, 1, {0})], None, Disconnected, "vertex", 2),
        (2, [(0, 1, {0})], {0: 0}, NonPositiveWeight, "label", 0),
        (2, [(0, 1, {0})], {0: -2}, NonPositiveWeight, "weight", -2),
    ],
)
def test_build_graph_rejects(n, edges, weights, exc, attr, value):
    with pytest.raises(exc) as info:
        build_graph(n, edges, weights)
    assert getattr(info.value, attr) == value


def test_build_graph_rejects_out_of_range():
    with pytest.raises(VertexOutOfRange):
        build_graph(2, [(0, 2, {0})])
    with pytest.raises(UnknownLabel):
        build_graph(2, [(0, 1, {3})], num_labels=2)


def test_disconnected_allowed_on_request():
    g = build_graph(3, [(0, 1, {0})], require_connected=False)
    assert not is_connected(g)


def test_remove_nothing_keeps_all_edges(figure2):
    assert remove_labels(figure2, set()) == frozenset(range(figure2.m))


def test_cascading_closes_through_shared_edges(figure2):
    # A (0) shares edges with C (2) and D (3); B and E stay.
    assert closure(figure2, {0}) == {0, 2, 3}
    alive = remove_labels(figure2, {0}, Semantics.CASCADING)
    gone = set(range(figure2.m)) - alive
    assert all(figure2.edges[i].labels & {0, 2, 3} for i in gone)
    assert all(not figure2.edges[i].labels & {0, 2, 3} for i in alive)


def test_independent_removal_is_literal():
    g = build_graph(3, [(0, 1, {0, 2}), (1, 2, {2}), (0, 2, {1})])
    alive = remove_labels(g, {0}, Semantics.INDEPENDENT)
    assert alive == {1, 2}
    assert remove_labels(g, {0}, Semantics.CASCADING) == {2}


def test_remove_unknown_label(figure2):
    with pytest.raises(UnknownLabel):
        remove_labels(figure2, {9})


def test_connectivity_oracles():
    g = build_graph(2, [(0, 1, {0})])
    assert is_connected(g)
    assert not is_connected(g, set())
    path = build_graph(3, [(0, 1, {0}), (1, 2, {1})])
    assert is_st_connected(path, 0, 2)
    assert not is_st_connected(path, 0, 2, {0})
    with pytest.raises(VertexOutOfRange):
        is_st_connected(path, 0, 3)


def test_stats_figure1(figure1):
    st = compute_stats(figure1)
    assert st.label_degree == (3, 3, 3, 3)
    assert st.min_label_degree == 3
    assert st.label_frequency == (3, 2, 3)
    assert st.max_label_frequency == 3


def test_stats_star():
    g = build_graph(4, [(0, 1, {0}), (0, 2, {1}), (0, 3, {2})])
    st = compute_stats(g)
    assert st.label_degree == (3, 1, 1, 1)
    assert st.min_label_degree == 1


@settings(max_examples=200, deadline=None)
@given(labeled_graphs(max_labels=5))
def test_cascading_survivors_subset_of_independent(g):
    for k in range(g.num_labels + 1):
        for chosen in combinations(range(g.num_labels), k):
            casc = remove_labels(g, chosen, Semantics.CASCADING)
            ind = remove_labels(g, chosen, Semantics.INDEPENDENT)
            assert casc <= ind


@settings(max_examples=200, deadline=None)
@given(labeled_graphs(max_labels=6, overlap=False))
def test_semantics_agree_without_overlaps(g):
    for mask in range(1 << g.num_labels):
        chosen = [i for i in range(g.num_labels) if mask >> i & 1]
        assert remove_labels(g, chosen, "cascading") == remove_labels(g, chosen, "independent")


@settings(max_examples=200, deadline=None)
@given(labeled_graphs(overlap=False))
def test_label_degree_at_most_degree_without_overlaps(g):
    st = compute_stats(g)
    for v in range(g.n):
        assert st.label_degree[v] <= st.degree[v]
        incident = [g.edges[e].labels for _, e in g.adjacency[v]]
        distinct = len(set().union(*incident)) == len(incident)
        assert (st.label_degree[v] == st.degree[v]) == distinct
    assert sum(st.label_frequency) >= g.m
