"""
Exception hierarchy shared by every critcolor module.
"""

from typing import Optional


class CritcolorError(Exception):
    """Base class for all library errors."""


# ==================== GRAPH ERRORS ====================


class GraphError(CritcolorError):
    pass


class OutOfRange(GraphError):
    def __init__(self, vertex, n: int):
        super().__init__(f"vertex {vertex!r} is outside 0..{n - 1}")
        self.vertex = vertex
        self.n = n


class SelfLoop(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class MalformedEncoding(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class CycleTooSmall(GraphError):
    pass


class NoEdges(GraphError):
    pass


class SizeMismatch(GraphError):
    pass


class BrooksException(GraphError):
    """The input is one of the graphs Brooks' theorem excludes."""


class IsComplete(BrooksException):
    pass


class IsOddCycle(BrooksException):
    pass


class Disconnected(BrooksException):
    pass


# ==================== COLORING ERRORS ====================


class ColoringError(CritcolorError):
    pass


class InvalidColoring(ColoringError):
    pass


class SchemeMismatch(ColoringError):
    pass


class NotColorableInForm(ColoringError):
    pass


class BadGroupIndex(ColoringError):
    pass


class PreconditionViolated(ColoringError):
    def __init__(self, message: str, vertex: Optional[int] = None):
        super().__init__(message if vertex is None else f"{message} (vertex {vertex})")
        self.vertex = vertex


class ImproperResult(ColoringError):
    pass


class ObjectiveChanged(ImproperResult):
    """A move produced a proper coloring with a different internal-edge count."""


class NotInComponent(ColoringError):
    pass


class DegreeConditionFails(ColoringError):
    pass


class NotMinimal(ColoringError):
    pass


class InitialColoringNotFound(ColoringError):
    pass


class Timeout(CritcolorError):
    """An exact search ran past its budget."""


# ==================== HARNESS ERRORS ====================


class HarnessError(CritcolorError):
    pass


class CorpusIOError(HarnessError):
    pass


class MalformedEntry(HarnessError):
    def __init__(self, source: str, line: int, reason: str):
        super().__init__(f"{source}:{line}: {reason}")
        self.source = source
        self.line = line
        self.reason = reason


class RangeTooLarge(HarnessError):
    pass


class InvalidParameter(HarnessError):
    pass
