"""Exception types shared across the package."""


class SeriesError(ArithmeticError):
    """Base class for failed power-series operations."""


class NonUnitDivisor(SeriesError):
    pass


class NonzeroConstantTerm(SeriesError):
    pass


class NotRevertible(SeriesError):
    pass


class NonUnitConstant(SeriesError):
    pass


class NotDivisibleByT(SeriesError):
    pass


class OrderExceeded(SeriesError, IndexError):
    """A coefficient beyond the known truncation order was requested."""


class InvalidRiordanArray(SeriesError, ValueError):
    pass


class UnnormalizedG(SeriesError):
    """The Z-sequence formula needs g(0) == 1."""


class InsufficientDerivatives(ValueError):
    pass
