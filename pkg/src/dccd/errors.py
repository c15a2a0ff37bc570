"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Numeric parameters out of the allowed range."""


class StructuralError(ValueError):
    """A design or family does not have the structure an operation requires."""


class SearchRefused(ParameterError):
    """The requested search exceeds the default size guard."""


class SearchBudgetExceeded(RuntimeError):
    """The search ran out of node budget before reaching a verdict."""

    def __init__(self, nodes: int, b: int):
        super().__init__(f"search budget of {nodes} nodes exhausted while trying b={b}")
        self.nodes = nodes
        self.b = b
