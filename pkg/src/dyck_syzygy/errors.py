"""Exception types raised across the package."""


class DyckSyzygyError(Exception):
    """Base class for all errors raised by this package."""


class NotAPartition(DyckSyzygyError, ValueError):
    pass


class NotAPath(DyckSyzygyError, ValueError):
    pass


class NotDyck(DyckSyzygyError, ValueError):
    pass


class Overlap(DyckSyzygyError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UncoverableBullet(DyckSyzygyError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class RegionOverflow(DyckSyzygyError, RuntimeError):
    pass


class NegativeCoefficient(DyckSyzygyError, ArithmeticError):
    pass


class ComparablePair(DyckSyzygyError, ValueError):
    pass


class Mismatch(DyckSyzygyError, AssertionError):
    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree
