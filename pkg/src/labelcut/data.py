"""Shipped fixture instances."""

from importlib import resources

from .formats import parse
from .model import LabeledGraph


def fixture_names() -> list:
    root = resources.files("labelcut") / "fixtures"
    return sorted(p.name[:-3] for p in root.iterdir() if p.name.endswith(".lg"))


def fixture_text(name: str) -> str:
    return (resources.files("labelcut") / "fixtures" / f"{name}.lg").read_text()


def load_fixture(name: str) -> LabeledGraph:
    return parse(fixture_text(name))
