"""Exception hierarchy for labelcut."""


class LabelCutError(Exception):
    """Base class for every error raised by this package."""


class GraphError(LabelCutError, ValueError):
    """An edge list or label table fails validation."""


class SelfLoop(GraphError):
    def __init__(self, edge_index, vertex):
        super().__init__(f"edge {edge_index} is a self-loop at vertex {vertex}")
        self.edge_index = edge_index
        self.vertex = vertex


class DuplicateEdge(GraphError):
    def __init__(self, edge_index, u, v):
        super().__init__(f"edge {edge_index} duplicates undirected edge ({u}, {v})")
        self.edge_index = edge_index
        self.endpoints = (u, v)


class EmptyLabelSet(GraphError):
    def __init__(self, edge_index):
        super().__init__(f"edge {edge_index} has an empty label set")
        self.edge_index = edge_index


class Disconnected(GraphError):
    def __init__(self, unreachable):
        super().__init__(f"graph is disconnected; vertex {unreachable} unreachable from 0")
        self.vertex = unreachable


class NonPositiveWeight(GraphError):
    def __init__(self, label, weight):
        super().__init__(f"label {label} has non-positive weight {weight}")
        self.label = label
        self.weight = weight


class UnknownLabel(GraphError, KeyError):
    def __init__(self, label, where=""):
        msg = f"unknown label id {label}"
        super().__init__(msg + (f" ({where})" if where else ""))
        self.label = label

    def __str__(self):
        return self.args[0]


class VertexOutOfRange(GraphError, IndexError):
    def __init__(self, vertex, n):
        super().__init__(f"vertex {vertex} out of range for n={n}")
        self.vertex = vertex


class UnknownEdge(GraphError, KeyError):
    def __init__(self, edge_index):
        super().__init__(f"unknown edge id {edge_index}")
        self.edge_index = edge_index

    def __str__(self):
        return self.args[0]


class BudgetExceeded(LabelCutError):
    def __init__(self, size, budget):
        super().__init__(f"instance has {size} labels/elements; exact budget is {budget}")
        self.size = size
        self.budget = budget


class NoTerminals(LabelCutError):
    def __init__(self):
        super().__init__("s-t variant requires terminals")


class SingleLabelEdge(LabelCutError, ValueError):
    def __init__(self, edge_index):
        super().__init__(f"edge {edge_index} carries a single label; nothing to split")
        self.edge_index = edge_index


class ProvenanceMismatch(LabelCutError):
    """A transform report does not belong to the graph it is checked against."""


class ReductionMismatch(LabelCutError, AssertionError):
    """Hitting-set and label-cut answers disagree on a constructed instance."""


class ParseError(LabelCutError, ValueError):
    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
