"""Exception hierarchy shared across the package."""


class GptkitError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(GptkitError):
    """Vector or matrix shapes are inconsistent with the declared dimensions."""


class InvalidArgument(GptkitError):
    pass


class NumericalFailure(GptkitError):
    """An iterative procedure exceeded its cap or lost numerical validity."""


class NotAState(GptkitError):
    pass


class SingularMap(GptkitError):
    pass


class UnsupportedKind(GptkitError):
    pass


class ScaleLimit(GptkitError):
    """Problem size exceeds the documented desk-scale limits."""


class InvalidTable(GptkitError):
    pass


class InvalidSetup(GptkitError):
    pass


class EmptySubset(GptkitError):
    pass


class WrongSlitCount(GptkitError):
    pass


class InvalidKraus(GptkitError):
    pass


class TooFewSamples(GptkitError):
    pass
