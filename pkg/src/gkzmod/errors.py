"""Exception types.  Each carries the CLI exit status it maps to."""


class GKZError(Exception):
    exit_code = 1


class InputError(GKZError, ValueError):
    """Malformed problem data (dimensions, spanning condition, syntax)."""
    exit_code = 2


class DegenerateMatrix(InputError):
    """The extended matrix is rank deficient."""


class NonGlobalOrder(GKZError, ValueError):
    """A weight order that is not a well-order was handed to Buchberger."""


class NonGenericWeight(GKZError):
    """The t-initial ideal of the toric ideal is not a monomial ideal."""
    exit_code = 3


class NonGenericParameter(GKZError):
    """A top standard pair does not determine a unique exponent."""
    exit_code = 4


class ResonantExponent(GKZError):
    """A series coefficient would divide by zero within the truncation."""
    exit_code = 5


class UnitIndicialIdeal(GKZError):
    """The elimination ideal along t=0 is the whole ring."""
    exit_code = 6


class RouteDisagreement(GKZError):
    """The two indicial-polynomial algorithms returned different answers."""
    exit_code = 7
