"""Exception hierarchy shared by every module."""


class SteinbergError(Exception):
    """Base class for domain errors raised by this package."""


class AxiomViolation(SteinbergError):
    def __init__(self, axiom: str, morphisms=()):
        self.axiom = axiom
        self.morphisms = tuple(morphisms)
        detail = f" (morphisms: {', '.join(map(str, self.morphisms))})" if self.morphisms else ""
        super().__init__(f"{axiom}{detail}")


class EmptyGroupoid(SteinbergError):
    pass


class ComplexityRefusal(SteinbergError):
    """An exhaustive search was asked to run above its size guard."""


class NotABisection(SteinbergError):
    pass


class NotInvariant(SteinbergError):
    pass


class SupportViolation(SteinbergError):
    pass


class GroupoidMismatch(SteinbergError):
    pass


class SourceVertex(SteinbergError):
    """A vertex emits no edge, so no infinite path starts there."""

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex!r} emits no edge")


class GraphMismatch(SteinbergError):
    pass


class DepthTooSmall(SteinbergError):
    pass


class BadPair(SteinbergError):
    pass


class NotAGroup(SteinbergError):
    pass


class NotBijective(SteinbergError):
    pass


class ParseError(SteinbergError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line else ""
        super().__init__(f"{message}{where}")
