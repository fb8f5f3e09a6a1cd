"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ModexpError(Exception):
    """Base class for all errors raised by modexp."""


class EdgeListSyntaxError(ModexpError, ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class NonPositiveWeight(ModexpError, ValueError):
    pass


class VertexOutOfRange(ModexpError, ValueError):
    pass


class EmptySet(ModexpError, ValueError):
    pass


class PartitionMismatch(ModexpError, ValueError):
    pass


class OutOfRange(ModexpError, ValueError):
    pass


class SizeLimitExceeded(ModexpError):
    """An exhaustive search was asked to run beyond its configured cap."""

    def __init__(self, size: int, cap: int, flag: str = "--max-n") -> None:
        super().__init__(f"instance size {size} exceeds enumeration cap {cap} (raise it with {flag})")
        self.size = size
        self.cap = cap
        self.flag = flag


class TooFewVertices(ModexpError, ValueError):
    pass


class ZeroVolumeSide(ModexpError, ValueError):
    pass


class EmptyGraph(ModexpError, ValueError):
    pass


class Disconnected(ModexpError, ValueError):
    pass


class ZeroDegreeVertex(ModexpError, ValueError):
    pass


class EdgelessSubgraph(ModexpError, ValueError):
    pass


class NotAComponent(ModexpError, ValueError):
    pass


class NotAComponentUnion(ModexpError, ValueError):
    pass


class IsolatedVerticesPresent(ModexpError, ValueError):
    pass


class TooManyEdgesInH(ModexpError, ValueError):
    pass


class DegenerateParameters(ModexpError, ValueError):
    pass


class HypothesisViolated(ModexpError):
    """No sparse cut exists where the decomposition loop needs one.

    ``vertices`` is the offending vertex set: it induces a subgraph that is
    too well connected for the requested expansion parameter.
    """

    def __init__(self, vertices, message: str = "") -> None:
        self.vertices = frozenset(vertices)
        text = message or "no qualifying sparse cut"
        super().__init__(f"{text}; offending set {sorted(self.vertices)}")
