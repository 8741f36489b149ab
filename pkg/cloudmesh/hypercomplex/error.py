class HypercomplexError(ValueError):
    """base class of all errors raised by the verification engine"""


class NotInvertible(HypercomplexError):
    pass


class InvalidWeight(HypercomplexError):
    pass


class NotDifferentiable(HypercomplexError):
    pass


class VariantMismatch(HypercomplexError):
    pass


class DimensionMismatch(HypercomplexError):
    pass


class AdjointUnavailable(HypercomplexError):
    pass


class NotHermitian(HypercomplexError):
    pass


class NotKahlerJet(HypercomplexError):
    pass


class PositivityPreconditionFailed(HypercomplexError):
    pass


class DimensionOverflow(HypercomplexError):
    pass


class ConfigError(HypercomplexError):
    """raised for malformed scenario files, command line values and out of
    range parameters"""


class InvalidQuery(HypercomplexError):
    """a positivity query whose mode does not fit its parameters"""
