"""Exception types shared across the package."""


class FanopolyError(ValueError):
    """Base class for all errors raised by fanopoly."""


class DimensionError(FanopolyError):
    """Input has the wrong shape (non-square matrix, mismatched vector lengths, ...)."""


class SingularMatrixError(FanopolyError):
    """A matrix required to be invertible is singular."""


class DegeneracyError(FanopolyError):
    """Degenerate polytope input: not full-dimensional, or a redundant vertex list."""


class DomainError(FanopolyError):
    """A precondition on the geometric input is violated (e.g. origin not interior)."""


class ConstructionError(FanopolyError):
    """A hard-coded catalog polytope failed its build-time verification battery."""


class EnumerationError(FanopolyError):
    """The polygon enumeration produced an unexpected number of classes."""


class TaxonomyError(FanopolyError):
    """The five-vertex polygon taxonomy could not be assigned unambiguously."""


class ClassificationError(FanopolyError):
    """A vertex distribution matched no known case of the slice table."""


class ConsistencyError(FanopolyError):
    """An internal invariant that should hold for every valid input failed."""


class ParseError(FanopolyError):
    """Malformed polytope file."""

    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
