"""Custom numerical exceptions."""


class ShotNoiseError(Exception):
    """Shot Noise Error.

    Base class of every error raised by the library.
    """


class DomainError(ShotNoiseError, ValueError):
    """Domain Error.

    Raised when an argument lies outside the domain of an operation, e.g. a
    non-positive argument given to log_gamma() or volterra_nu().
    """


class IntegrandError(ShotNoiseError, ArithmeticError):
    """Integrand Error.

    Raised when an integrand returns NaN. Quadrature never silently ignores
    NaN values.
    """


class ConvergenceError(ShotNoiseError, ArithmeticError):
    """Convergence Error.

    Raised when a series, a root finder or an oscillatory integral does not
    converge and the operation cannot return a flagged result instead.
    """


class UnsupportedLawError(ShotNoiseError, NotImplementedError):
    """Unsupported Law.

    Raised when an analytic density or distribution function is requested
    for an exponent/amplitude combination without a closed form.
    """


class InvalidApproximationError(ShotNoiseError):
    """Invalid Approximation.

    Raised when an exponential-sum tail has a rate with non-positive real
    part, i.e. the approximation does not decay.
    """


class ConfigurationError(ShotNoiseError, ValueError):
    """Configuration Error.

    Raised when options or configuration files hold invalid values.
    """
