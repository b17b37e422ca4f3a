"""Exception types shared across the package."""

from __future__ import annotations


class ParagliderError(Exception):
    """Base class for all errors raised by this package."""


class GraphSizeError(ParagliderError, ValueError):
    """A graph (or a request) exceeds a documented size limit."""

    def __init__(self, what: str, value: int, limit: int) -> None:
        super().__init__(f"{what}: {value} exceeds the limit of {limit}")
        self.what = what
        self.value = value
        self.limit = limit


class GraphParseError(ParagliderError, ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class BudgetExceeded(ParagliderError):
    """A brute-force oracle was asked to work beyond its budget cap."""

    def __init__(self, invariant: str, n: int, cap: int) -> None:
        super().__init__(f"{invariant}: n={n} exceeds the brute-force budget of {cap} vertices")
        self.invariant = invariant
        self.n = n
        self.cap = cap


class NotTriangleFreeError(ParagliderError, ValueError):
    def __init__(self, witness: tuple[int, int, int]) -> None:
        super().__init__(f"graph contains a triangle {witness}")
        self.witness = witness


class ClassViolation(ParagliderError, ValueError):
    """Input is outside the class an operation requires.

    ``predicate`` names the failed condition and ``witness`` holds the
    offending vertices (for a forbidden induced subgraph, in pattern label
    order).
    """

    def __init__(self, predicate: str, witness: tuple[int, ...] | None = None) -> None:
        msg = f"class violation: {predicate}"
        if witness is not None:
            msg += f" (witness {list(witness)})"
        super().__init__(msg)
        self.predicate = predicate
        self.witness = witness


class MalformedStructure(ParagliderError, RuntimeError):
    """A decomposition came out in a shape the class cannot produce."""


class InternalContradiction(ParagliderError, RuntimeError):
    """A constructed object failed its own verification."""
