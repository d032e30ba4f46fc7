"""Exception hierarchy shared by every turan_lab module."""


class TuranLabError(Exception):
    """Base class for all library errors."""


class HypergraphError(TuranLabError, ValueError):
    pass


class OutOfRangeVertex(HypergraphError):
    pass


class WrongEdgeSize(HypergraphError):
    pass


class DuplicateVertexInEdge(HypergraphError):
    pass


class UniformityMismatch(HypergraphError):
    pass


class DegenerateParameters(TuranLabError, ValueError):
    pass


class EmptyGrid(TuranLabError, ValueError):
    pass


class BadPartition(TuranLabError, ValueError):
    pass


class KOutOfRange(TuranLabError, ValueError):
    pass


class UnknownName(TuranLabError, KeyError):
    pass


class BadParams(TuranLabError, ValueError):
    pass


class LengthMismatch(TuranLabError, ValueError):
    pass


class ZeroMultiplicity(TuranLabError, ValueError):
    pass


class NotAHole(TuranLabError, ValueError):
    pass


class PropertyViolation(TuranLabError, AssertionError):
    """A verified reduction step failed its property check (implementation bug)."""


class HypothesisFails(TuranLabError, ValueError):
    pass


class UnknownClaim(TuranLabError, KeyError):
    pass


class BudgetExceeded(TuranLabError, RuntimeError):
    """Raised only when a caller asks for strict budgets; carries the partial result."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ParseError(TuranLabError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(message + where)
        self.line = line
        self.column = column
