"""Shared exception types, mapped to CLI exit codes in cli.py."""


class DomainError(ValueError):
    """Invalid mathematical input (bad delta, missing heights, collinear points...)."""


class NotFoldableError(DomainError):
    """Raised when the dual graph of a triangulation is not bipartite."""


class StructureError(DomainError):
    """Malformed simplicial complex (overlap, dangling edges, unused points)."""


class DegenerateInstanceError(RuntimeError):
    """A counting instance stayed degenerate after all retries (tangency etc.)."""


class EliminationError(RuntimeError):
    """Elimination produced an identically zero result after all retries."""
