"""Exception hierarchy shared by every module of the package."""


class RicciFlatError(Exception):
    """Base class for all errors raised by ricciflat."""


class GraphConstructionError(RicciFlatError, ValueError):
    pass


class SelfLoop(GraphConstructionError):
    pass


class DuplicateEdge(GraphConstructionError):
    pass


class IndexOutOfRange(GraphConstructionError):
    pass


class MalformedGraph6(RicciFlatError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EdgeNotPresent(RicciFlatError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class UnknownName(RicciFlatError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class BadParameter(RicciFlatError, ValueError):
    pass


# Domain errors raised by metric and curvature computations.
class DomainError(RicciFlatError):
    pass


class DisconnectedGraph(DomainError):
    pass


class NotRegular(DomainError):
    pass


class NotAdjacent(DomainError):
    pass


class NotCubic(DomainError):
    pass


class GirthTooSmall(DomainError):
    pass


class IdlenessOutOfRange(DomainError, ValueError):
    pass


class IsolatedVertex(DomainError):
    pass


class InvalidMeasure(DomainError, ValueError):
    pass


class OddOrder(RicciFlatError, ValueError):
    pass


class UnsupportedSize(RicciFlatError, ValueError):
    pass


class SearchBudgetExceeded(RicciFlatError, RuntimeError):
    pass
