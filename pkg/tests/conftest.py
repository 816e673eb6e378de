import pytest
from hypothesis import strategies as st

from labelcut import build_graph
from labelcut.data import load_fixture


@pytest.fixture
def figure1():
    return load_fixture("figure1")


@pytest.fixture
def figure2():
    return load_fixture("figure2")


@pytest.fixture
def single_edge():
    return load_fixture("single_edge")


@pytest.fixture
def two_paths():
    return load_fixture("two_paths")


@st.composite
def labeled_graphs(draw, max_n=7, max_labels=6, max_extra=4, overlap=True, weighted=False,
                   terminals=True):
    """Connected simple labeled graphs built from a random spanning tree."""
    n = draw(st.integers(2, max_n))
    num_labels = draw(st.integers(1, max_labels))
    pairs = []
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        pairs.append((u, v))
    present = set(pairs)
    candidates = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in present]
    if candidates:
        extra = draw(st.lists(st.sampled_from(candidates), max_size=max_extra, unique=True))
        pairs += extra
    label = st.integers(0, num_labels - 1)
    if overlap:
        label_sets = st.sets(label, min_size=1, max_size=min(3, num_labels))
    else:
        label_sets = label.map(lambda x: {x})
    edges = [(u, v, draw(label_sets)) for u, v in pairs]
    weights = {}
    if weighted:
        weights = {i: draw(st.integers(1, 4)) for i in range(num_labels)}
    terms = None
    if terminals:
        s = draw(st.integers(0, n - 1))
        t = draw(st.integers(0, n - 1).filter(lambda x: x != s))
        terms = (s, t)
    return build_graph(n, edges, weights, num_labels=num_labels, terminals=terms)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.VERDICTS:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(test_acceptance.VERDICTS):
            terminalreporter.write_line(line)
