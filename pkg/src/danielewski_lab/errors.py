"""Domain errors raised by the library.

Every error carries a ``kind`` (the class name) and a ``details`` mapping so
the CLI can emit a structured report without inspecting messages.
"""


class DanielewskiError(Exception):
    """Base class for all domain rejections."""

    def __init__(self, message: str = "", **details):
        super().__init__(message or type(self).__name__)
        self.details = details

    @property
    def kind(self) -> str:
        return type(self).__name__


# -- algebra ----------------------------------------------------------------

class FieldMismatch(DanielewskiError):
    pass


class PositiveCharacteristic(DanielewskiError):
    pass


class WrongConstantTerm(DanielewskiError):
    pass


class InexactDivision(DanielewskiError):
    pass


# -- trees ------------------------------------------------------------------

class MalformedTree(DanielewskiError):
    pass


class DuplicateChildWeight(MalformedTree):
    pass


class MultipleRoots(MalformedTree):
    pass


class Cycle(MalformedTree):
    pass


class UnknownParent(MalformedTree):
    pass


class SeparatednessViolation(DanielewskiError):
    pass


# -- surfaces ---------------------------------------------------------------

class NotDanielewski(DanielewskiError):
    """Q(0, y) does not split with simple roots in the base field."""


class NotSplit(NotDanielewski):
    pass


class MultipleRoot(NotDanielewski):
    pass


class ZeroFiberPolynomial(NotDanielewski):
    pass


class EmptyFiber(NotDanielewski):
    pass


class NotARake(DanielewskiError):
    pass


class LeavesAtMixedLevels(DanielewskiError):
    pass


class ConstantTermCollision(DanielewskiError):
    pass


class InvalidStandardForm(DanielewskiError):
    pass


class RootAtZero(DanielewskiError):
    pass


class NonMonic(DanielewskiError):
    pass


class EmptyLevel(DanielewskiError):
    pass


class NotNormalizedComb(DanielewskiError):
    pass


class IdentityFailure(DanielewskiError):
    pass


# -- automorphisms ----------------------------------------------------------

class InvalidDatum(DanielewskiError):
    pass


class DatumInconsistent(DanielewskiError):
    pass


class LemmaViolation(DanielewskiError):
    pass


class DivisibilityFailure(DanielewskiError):
    pass


class PrecisionTooLow(DanielewskiError):
    pass


class HTooSmall(DanielewskiError):
    pass


class InfiniteSingularLocus(DanielewskiError):
    pass
