"""Exception hierarchy shared by all polytrunc modules."""

from __future__ import annotations


class PolytopeError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(PolytopeError):
    """A rotation system failed one of the polytopality checks."""


class NotCubic(ValidationError):
    """Some vertex does not have exactly three neighbours."""


class AsymmetricAdjacency(ValidationError):
    """A vertex lists a neighbour that does not list it back."""


class LoopOrMultiEdge(ValidationError):
    """The adjacency contains a loop or a repeated edge."""


class EulerViolation(ValidationError):
    """Face tracing does not close up with f0 - f1 + f2 = 2."""


class Not3Connected(ValidationError):
    """The graph is disconnected or has a cut of fewer than 3 vertices."""


class TooLarge(ValidationError):
    """The vertex count exceeds the supported desk-scale limit."""


class NonSimpleResult(PolytopeError):
    """Cutting this edge set would create a non-simple vertex (valency 2)."""


class NonSimpleInput(PolytopeError):
    """The flagness criterion is only defined for cuts with simple results."""


class HasTriangles(PolytopeError):
    """Whole-graph truncation requires a polytope without triangular faces."""


class ParseError(PolytopeError):
    """Malformed canonical-text input."""

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class BadHeader(PolytopeError):
    """A planar_code stream does not start with the expected header."""


class TruncatedRecord(PolytopeError):
    """A planar_code stream ended in the middle of a record."""


class UnknownName(PolytopeError):
    """Requested catalog entry does not exist."""
