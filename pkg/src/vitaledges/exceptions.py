class ValidationError(ValueError):
    """Raised when an input graph, edge set or parameter is invalid."""
