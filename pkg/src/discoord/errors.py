"""Exception and warning types raised across the package."""


class DiscoordError(Exception):
    """Base class for every error raised by discoord."""


# -- graph ------------------------------------------------------------------

class GraphError(DiscoordError, ValueError):
    pass


class SelfLoop(GraphError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"self-loop on node {node}")


class DuplicateEdge(GraphError):
    def __init__(self, i, j):
        self.edge = (i, j)
        super().__init__(f"duplicate edge ({i}, {j})")


class NodeOutOfRange(GraphError):
    def __init__(self, node, node_count):
        self.node = node
        super().__init__(f"node {node} outside 1..{node_count}")


class NotAnEdge(GraphError):
    def __init__(self, i, j):
        self.edge = (i, j)
        super().__init__(f"({i}, {j}) is not an edge")


# -- scenario ---------------------------------------------------------------

class ScenarioError(DiscoordError, ValueError):
    pass


class ScenarioSyntaxError(ScenarioError):
    def __init__(self, line, msg):
        self.line = line
        super().__init__(f"line {line}: {msg}")


class MissingField(ScenarioError):
    def __init__(self, name):
        self.field = name
        super().__init__(f"missing field '{name}'")


class UnknownField(ScenarioError):
    def __init__(self, name):
        self.field = name
        super().__init__(f"unknown field '{name}'")


class LengthMismatch(ScenarioError):
    def __init__(self, name, got, expected):
        self.field = name
        super().__init__(f"field '{name}' has {got} entries, expected {expected}")


class DisconnectedGraph(ScenarioError):
    def __init__(self):
        super().__init__("graph is not connected")


class BoundViolation(ScenarioError):
    def __init__(self, node, lower, upper):
        self.node = node
        super().__init__(f"node {node}: lower bound {lower} exceeds upper bound {upper}")


class NonFiniteValue(ScenarioError):
    def __init__(self, node, name):
        self.node = node
        self.field = name
        super().__init__(f"node {node}: non-finite value in '{name}'")


# -- solvers ----------------------------------------------------------------

class NotConverged(DiscoordError):
    """Iteration hit ``max_rounds``; the partial result rides along."""

    def __init__(self, result, phase):
        self.result = result
        self.phase = phase
        super().__init__(f"{phase} did not converge within {result.rounds_used} rounds")


class SingularSystem(DiscoordError):
    pass


class ZeroCapacityWarning(UserWarning):
    """Demand is nonzero but no node has any generation capacity."""
