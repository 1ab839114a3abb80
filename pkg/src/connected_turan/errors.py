"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph, or an operation applied outside its domain."""


class Graph6ParseError(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ParameterError(ValueError):
    """Construction or formula parameters outside the supported range."""


class CapExceeded(ValueError):
    """Requested enumeration is larger than the configured cap."""


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of nodes before reaching a verdict."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} nodes exhausted")
        self.nodes = nodes
