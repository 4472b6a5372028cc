"""Exception types raised across the package."""


class LimitDiscError(Exception):
    """Base class for every error raised by limitdisc."""


class InputError(LimitDiscError, ValueError):
    """Invalid user-supplied data (maps, words, files)."""


class NumericError(LimitDiscError, ArithmeticError):
    """A numerical procedure failed to produce a trustworthy value."""


class HypothesisViolated(LimitDiscError):
    """A theorem was requested outside the hypotheses under which it holds."""

    def __init__(self, message, offenders=()):
        super().__init__(message)
        self.offenders = list(offenders)


# moebius
class DegenerateMap(InputError):
    pass


class PoleDerivative(NumericError):
    pass


class PoleInsideDisc(InputError):
    pass


# tangency
class NotInMD(InputError):
    def __init__(self, message, offenders=()):
        super().__init__(message)
        self.offenders = list(offenders)


class NoConvergence(NumericError):
    pass


# classify
class NotTangentPair(InputError):
    pass


class NotAffine(NumericError):
    pass


class MissingGamma(InputError):
    pass


class NotLimitDisc(InputError):
    pass


class SeriesDiverges(NumericError):
    pass


class EmptyPrefix(InputError):
    pass


class UnknownName(InputError):
    pass


# dimension
class NoInteriorMinimum(InputError):
    pass


class LogBaseDegenerate(InputError):
    pass


class GraphNotComplete(HypothesisViolated):
    pass


class ConstructionFailed(NumericError):
    pass


# dynamics
class OrbitUnstable(NumericError):
    pass


class TraceTooShort(InputError):
    pass


class PointOutsideClosedDisc(InputError):
    pass


# io
class ParseError(InputError):
    pass
