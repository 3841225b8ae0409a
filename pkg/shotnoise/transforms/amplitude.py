"""Amplitude transforms and the exponent integral I(s).

For positive amplitudes the transform is the Laplace transform
E[exp(-sY)]; for symmetric amplitudes it is the characteristic function
E[cos(sY)]. Both enter the stationary law through

    I(s) = int_0^s (1 - w(xi)) / xi dxi.
"""

from logging import INFO, Logger, getLogger
from math import exp, expm1, log, log1p, sqrt

from scipy import special

from shotnoise.exceptions import DomainError, UnsupportedLawError
from shotnoise.laws import (
    AmplitudeLaw,
    DeterministicOne,
    GammaAmplitude,
    SymmetricLaplace,
)
from shotnoise.numerics import (
    EULER_GAMMA,
    QuadratureConfig,
    SeriesTruncation,
    integrate_finite,
)

logger: Logger = getLogger("shotnoise.transforms")
logger.setLevel(INFO)

# Below this argument Ein(s) is summed from its power series.
_EIN_SERIES_LIMIT: float = 1.0
_EXPONENT_INTEGRAL_CONFIG: QuadratureConfig = QuadratureConfig(
    abs_tol=1e-13, rel_tol=1e-12
)


def _check_argument(s: float) -> None:
    if s < 0.0:
        raise DomainError(f"Transforms are evaluated at s >= 0, got {s}.")


def amplitude_transform(law: AmplitudeLaw, s: float) -> float:
    """Compute the transform of the amplitude law at s.

    Parameters
    ----------
    law : laws.AmplitudeLaw
        The amplitude law.
    s : float
        Non-negative transform variable (a frequency for symmetric laws).

    Returns
    -------
    float
        exp(-s), (1+s)^(-beta) or (1+s^2)^(-beta).

    Raises
    ------
    DomainError
        If s < 0.

    """
    _check_argument(s)

    match law:
        case DeterministicOne():
            return exp(-s)
        case GammaAmplitude(beta=beta):
            return exp(-beta * log1p(s))
        case SymmetricLaplace(beta=beta):
            return exp(-beta * log1p(s * s))
        case _:
            raise UnsupportedLawError(f"No transform for amplitude '{law}'.")


def ein(s: float, trunc: SeriesTruncation = SeriesTruncation()) -> float:
    """Compute Ein(s) = int_0^s (1 - exp(-xi)) / xi dxi.

    The power series sum (-1)^(k+1) s^k / (k k!) is used below s = 1 and
    gamma + ln(s) + E1(s) above.

    Parameters
    ----------
    s : float
        Non-negative argument.
    trunc : SeriesTruncation, default=SeriesTruncation()
        The truncation of the power series.

    Returns
    -------
    float

    """
    _check_argument(s)

    if s >= _EIN_SERIES_LIMIT:
        return EULER_GAMMA + log(s) + float(special.exp1(s))

    total: float = 0.0
    term: float = 1.0

    for k in range(1, trunc.max_terms + 1):
        term *= -s / k if k > 1 else s
        contribution: float = term / k
        total += contribution

        if abs(contribution) <= trunc.term_tol * abs(total):
            break

    return total


def _gamma_exponent_integral(beta: float, s: float) -> float:
    """Compute int_0^s (1 - (1+xi)^(-beta)) / xi dxi."""
    if s == 0.0:
        return 0.0
    if beta == 1.0:
        return log1p(s)
    if beta == 2.0:
        return log1p(s) + s / (1.0 + s)
    if beta == 0.5:
        return 2.0 * log(0.5 * (1.0 + sqrt(1.0 + s)))

    def integrand(xi: float) -> float:
        if xi == 0.0:
            return beta

        return -expm1(-beta * log1p(xi)) / xi

    result = integrate_finite(integrand, 0.0, s, _EXPONENT_INTEGRAL_CONFIG)

    return result.value


def exponent_integral(law: AmplitudeLaw, s: float) -> float:
    """Compute I(s) = int_0^s (1 - w(xi)) / xi dxi for the amplitude law.

    Closed forms are used for deterministic amplitudes and for shapes
    beta in {1/2, 1, 2}; other shapes fall back to quadrature. A symmetric
    law with shape beta satisfies I(s) = I_gamma(beta)(s^2) / 2.

    Parameters
    ----------
    law : laws.AmplitudeLaw
        The amplitude law.
    s : float
        Non-negative argument.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If s < 0.

    """
    _check_argument(s)

    match law:
        case DeterministicOne():
            return ein(s)
        case GammaAmplitude(beta=beta):
            return _gamma_exponent_integral(beta, s)
        case SymmetricLaplace(beta=beta):
            return 0.5 * _gamma_exponent_integral(beta, s * s)
        case _:
            raise UnsupportedLawError(
                f"No exponent integral for amplitude '{law}'."
            )
