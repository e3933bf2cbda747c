"""Exception hierarchy.

Errors split into two families.  ``UsageError`` subclasses signal bad input
(out-of-range digits, a non-generic parameter set, a malformed walk).
``FalsificationError`` subclasses signal that a structural claim the library
relies on did not hold for the computed objects; those are never recoverable
and the CLI reports them with a dedicated exit code.
"""


class Gl2DiagramsError(Exception):
    pass


class UsageError(Gl2DiagramsError, ValueError):
    pass


class FalsificationError(Gl2DiagramsError):
    pass


# weights / gammamod
class RegularityError(UsageError):
    pass


class ParityError(UsageError):
    pass


class DigitRangeError(UsageError):
    pass


# galois
class GenericityError(UsageError):
    pass


# lattice
class WalkError(UsageError):
    pass


class AdjacencyError(WalkError):
    pass


class CoverageError(WalkError):
    pass


class BoundsError(WalkError):
    pass


class SizeGuardError(UsageError):
    pass


# explicit
class PrimalityError(UsageError):
    pass


class ScalarError(UsageError):
    pass


# phigamma: raised when a beta orbit does not cover every label
class TransitivityError(UsageError):
    pass


# poly
class NonAffineError(UsageError):
    pass


class DivisionError(Gl2DiagramsError, ArithmeticError):
    pass


# falsification events
class MatchingError(FalsificationError):
    pass


class UniquenessError(FalsificationError):
    pass


class DivisibilityError(FalsificationError):
    pass




class InternalError(FalsificationError):
    pass
