"""Exception hierarchy.

Everything raised on purpose by the package derives from :class:`HypRatioError`.
The command-line front end maps :class:`ParameterError` to exit status 2 and
:class:`NumericalError` to exit status 3.
"""


class HypRatioError(Exception):
    """Base class for all package errors."""


class ParameterError(HypRatioError, ValueError):
    """Parameters violate a precondition (e.g. ``-c`` is a non-negative integer)."""


class DegenerateError(ParameterError):
    """The base function degenerates to a polynomial and the request is not supported."""


class AmbiguityError(ParameterError):
    """A parameter sits so close to an exceptional value that a discrete answer is unstable."""


class NumericalError(HypRatioError, ArithmeticError):
    """A numerical procedure failed to deliver the requested accuracy."""


class ConvergenceError(NumericalError):
    """Series, quadrature or ODE integration did not converge.

    ``gap`` holds the last observed discrepancy when one is available.
    """

    def __init__(self, message, gap=None):
        super().__init__(message)
        self.gap = gap


class SingularTermError(NumericalError, ZeroDivisionError):
    """A finite sum hit a vanishing denominator before it terminated."""

    def __init__(self, message, index=None, term=None):
        super().__init__(message)
        self.index = index
        self.term = term


class PoleError(NumericalError):
    """Evaluation requested at (or numerically indistinguishable from) a pole."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class ZeroSearchError(NumericalError):
    """The zero finder could not locate the expected number of zeros."""


class MultiplicityError(NumericalError):
    """A zero expected to be simple appears to be multiple."""


class FitError(NumericalError):
    """An interpolation/fit problem is too ill-conditioned to trust."""

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition
