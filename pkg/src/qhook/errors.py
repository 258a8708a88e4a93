"""Exception hierarchy shared by all modules.

Each exception carries the process exit code the CLI reports for it:
2 for malformed input, 3 for mathematical domain errors, 4 when a
brute-force guard is exceeded.
"""


class QHookError(Exception):
    exit_code = 1


class ParseError(QHookError, ValueError):
    exit_code = 2

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DomainError(QHookError, ValueError):
    exit_code = 3


class GuardExceeded(QHookError):
    exit_code = 4


class NonPolynomial(DomainError):
    pass


class NegativeCoefficient(DomainError):
    pass


class ZeroMass(DomainError):
    pass


class DegenerateDistribution(DomainError):
    pass


class LengthExceedsM(DomainError):
    pass


class SingleLevel(DomainError):
    pass


class EmptyPartition(DomainError):
    pass


class NotATree(DomainError):
    pass


class ChainNotMaximal(DomainError):
    pass


class RankTooLarge(DomainError):
    pass


class NotStandardized(DomainError):
    pass


class BadParameters(DomainError):
    pass


class BadP(DomainError):
    pass


class ZeroNorm(DomainError):
    pass


class EmptyWeights(DomainError):
    pass


class MTooSmall(DomainError):
    pass


class InstanceTooLarge(GuardExceeded):
    pass


class TooManySummands(GuardExceeded):
    pass
