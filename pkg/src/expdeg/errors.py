"""Exception hierarchy shared by all modules."""


class ExpDegError(Exception):
    """Base class for every error raised by expdeg."""


class InvalidGraph(ExpDegError):
    pass


class NonStrict(ExpDegError):
    """The dual graph has a loop, so the expansion is not a scheme."""


class DirectedCycle(ExpDegError):
    pass


class NotBipartite(ExpDegError):
    pass


class InvalidSplit(ExpDegError):
    pass


class EmptyIndexSet(ExpDegError):
    pass


class OutOfRange(ExpDegError):
    pass


class InvalidAVector(ExpDegError):
    pass


class NotInBijectionRange(ExpDegError):
    """A support vector with an empty interior level has no strict index tuple."""


class NotSubset(ExpDegError):
    pass


class SizeMismatch(ExpDegError):
    pass


class LengthMismatch(ExpDegError):
    pass


class InvalidPosition(ExpDegError):
    pass


class InvalidConfiguration(ExpDegError):
    pass


class NoLimit(ExpDegError):
    pass


class NonSmoothSupport(ExpDegError):
    pass


class IsStable(ExpDegError):
    pass


class NotLWStable(ExpDegError):
    pass


class UnsupportedGraph(ExpDegError):
    pass


class UnsupportedDegree(ExpDegError):
    pass


class NonReduced(ExpDegError):
    pass


class MissingFiberCoordinate(ExpDegError):
    pass
