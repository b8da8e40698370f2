"""Exception hierarchy shared by every module of the package."""


class PackingError(Exception):
    """Base class for all errors raised by packcolor."""


class GraphInputError(PackingError, ValueError):
    pass


class OutOfRangeVertex(GraphInputError):
    pass


class SelfLoop(GraphInputError):
    pass


class NotOuterplanar(PackingError):
    """Raised when a graph (or one of its blocks) has no outerplane drawing.

    ``block`` holds the vertex tuple of the offending block when known.
    """

    def __init__(self, message, block=None):
        super().__init__(message)
        self.block = block


class NotSubcubic(PackingError):
    pass


class NotTwoConnected(PackingError):
    pass


class EdgeAdditionBreaksClass(PackingError):
    pass


class ClassOutOfRange(PackingError, ValueError):
    pass


class WrongSequence(PackingError, ValueError):
    pass


class InvalidInputColoring(PackingError, ValueError):
    pass


class NoInjection(PackingError):
    pass


class InternalProofStepFailed(PackingError):
    """A constructive step produced an invalid partial coloring.

    ``case`` names the proof case that was being applied.
    """

    def __init__(self, message, case=None):
        super().__init__(message if case is None else f"[{case}] {message}")
        self.case = case


class MemoryBudgetExceeded(PackingError):
    pass


class SolverTimeout(PackingError):
    pass


class InfeasibleRequest(PackingError, ValueError):
    pass
