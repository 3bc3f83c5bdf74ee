"""Exception hierarchy shared by all frieze_lab modules."""

from __future__ import annotations


class FriezeError(Exception):
    """Base class for every error raised by frieze_lab."""


# scalars
class DivisionByZero(FriezeError, ZeroDivisionError):
    pass


class IncompatibleFields(FriezeError):
    """Arithmetic between elements of two different quadratic fields."""


class ScalarParseError(FriezeError, ValueError):
    pass


# quivers
class InvalidQuiver(FriezeError, ValueError):
    pass


class NotSkewSymmetrizable(InvalidQuiver):
    pass


class VertexOutOfRange(FriezeError, IndexError):
    pass


class NotAcyclic(FriezeError):
    pass


class NotAffine(FriezeError):
    pass


class InvalidPermutation(FriezeError, ValueError):
    pass


# seed dynamics
class ZeroDenominator(FriezeError, ZeroDivisionError):
    """Mutation at a vertex whose current coordinate is zero."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"coordinate {vertex} is zero; cannot mutate there")


class NewCoordinateZero(FriezeError, ArithmeticError):
    """A mutation produced a zero coordinate, leaving the torus."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"mutation at {vertex} produced a zero coordinate")


class NotGeneralSpecialization(FriezeError, ArithmeticError):
    def __init__(self, step: int, vertex: int):
        self.step = step
        self.vertex = vertex
        super().__init__(f"orbit leaves the torus at step {step}, vertex {vertex}")


class InvalidAutomorphism(FriezeError, ValueError):
    pass


class NonLaurentResult(FriezeError, ArithmeticError):
    pass


# recurrence / parametrization
class InsufficientData(FriezeError, ValueError):
    pass


class NoRecurrenceFound(FriezeError):
    pass


class PeriodMismatch(FriezeError, ValueError):
    """A forced period that is not a multiple of the detected one."""


class FitFailed(FriezeError):
    def __init__(self, coordinate: int, tried: list, message: str = ""):
        self.coordinate = coordinate
        self.tried = tried
        super().__init__(message or f"no Laurent/polynomial fit for x{coordinate} (tried {tried})")


# polynomials
class VariableMismatch(FriezeError, ValueError):
    pass


class OrderMismatch(FriezeError, ValueError):
    pass


class ZeroDivisor(FriezeError, ZeroDivisionError):
    pass


class PolyParseError(FriezeError, ValueError):
    pass


# implicitization / pipeline
class AlphaZero(FriezeError, ValueError):
    pass


class DescentFailed(FriezeError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"generator is not defined over Q: {witness}")


class ShapeMismatch(FriezeError, ValueError):
    pass


class StructureViolation(FriezeError):
    pass


# folding
class NotAdmissible(FriezeError):
    def __init__(self, witness: str):
        self.witness = witness
        super().__init__(f"group action is not admissible: {witness}")


class OrderDependence(FriezeError):
    pass


class NotInvariant(FriezeError):
    pass
