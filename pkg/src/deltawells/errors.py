"""Exception hierarchy.

Every error raised on bad input derives from :class:`DeltaWellsError`, which
is itself a ``ValueError`` so generic callers can catch it the usual way.
"""


class DeltaWellsError(ValueError):
    """Base class for all library errors."""


class EmptySystem(DeltaWellsError):
    pass


class NonPositiveStrength(DeltaWellsError):
    pass


class DuplicateCenter(DeltaWellsError):
    pass


class NonPositiveConstant(DeltaWellsError):
    pass


class NonNegativeEnergy(DeltaWellsError):
    pass


class NonPositiveKappa(DeltaWellsError):
    pass


class UnitMismatch(DeltaWellsError):
    pass


class NoConvergence(DeltaWellsError):
    pass


class BranchOutOfRange(DeltaWellsError):
    pass


class BadRange(DeltaWellsError):
    pass


class DomainError(DeltaWellsError):
    pass


class BadGeometry(DeltaWellsError):
    pass


class NotCirculant(DeltaWellsError):
    pass


class AsymmetricCoefficients(DeltaWellsError):
    pass


class IndexOutOfRange(DeltaWellsError):
    pass


class KappaMismatch(DeltaWellsError):
    pass


class NotEntrywisePositive(DeltaWellsError):
    pass
