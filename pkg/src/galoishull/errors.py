"""Exception hierarchy.

Every error raised by the library derives from :class:`GaloisHullError`, which
is itself a :class:`ValueError` so callers that only care about bad input can
catch that.
"""


class GaloisHullError(ValueError):
    pass


# finite fields
class NonPrimeError(GaloisHullError):
    pass


class ReducibleModulusError(GaloisHullError):
    pass


class DegreeMismatchError(GaloisHullError):
    pass


class FieldMismatchError(GaloisHullError):
    """Elements or matrices from two different fields met in one operation."""


class EDoesNotDivideHError(GaloisHullError):
    pass


class ZeroInputError(GaloisHullError):
    pass


class NotInEError(GaloisHullError):
    """The element is not a (p^e + 1)-th power."""


class NoSuchOrderError(GaloisHullError):
    pass


class UnsupportedRootError(GaloisHullError):
    """Root extraction needs a discrete-log table that was not built."""


# linear algebra
class DimensionMismatchError(GaloisHullError):
    pass


class ColsMismatchError(DimensionMismatchError):
    pass


class RankDeficientError(GaloisHullError):
    pass


# codes
class InvalidCodeError(GaloisHullError):
    pass


class DuplicatePointsError(InvalidCodeError):
    pass


class ZeroMultiplierError(InvalidCodeError):
    pass


class DegreeTooHighError(GaloisHullError):
    pass


class TooLargeForExactError(GaloisHullError):
    pass


class ExtendedUnsupportedError(GaloisHullError):
    pass


class LengthMismatchError(GaloisHullError):
    pass


# constructions
class InvalidParamsError(GaloisHullError):
    pass


class HOverENotOddError(InvalidParamsError):
    pass


class SeedInvalidWitnessError(InvalidParamsError):
    pass


class ExtendedSeedRequiredError(InvalidParamsError):
    pass


class InvalidRangesError(InvalidParamsError):
    pass


class NormEquationFailedError(GaloisHullError):
    """A root the construction is guaranteed to have could not be found."""


class VerificationError(GaloisHullError):
    """A constructed object failed an internal post-condition."""
