"""Volterra nu and mu functions and the Fransen-Wrigge phi function.

All three are index integrals over [0, inf) whose integrands are evaluated
in log space. For small arguments nu also has the Wyman-Wong asymptotic
series in powers of 1/ln(z).
"""

from functools import lru_cache
from logging import INFO, Logger, getLogger
from math import exp, inf, lgamma, log
from typing import Callable

from shotnoise.exceptions import DomainError

from .options import INDEX_INTEGRAL_CONFIG
from .quadrature import QuadratureResult, integrate_semi_infinite
from .special_functions import (
    EULER_GAMMA,
    ReciprocalGammaCoeffs,
    reciprocal_gamma_coeffs,
)

logger: Logger = getLogger("shotnoise.volterra")
logger.setLevel(INFO)

# Argument at which the deterministic-amplitude laws evaluate nu for u = 1.
Z_SWITCH: float = exp(-(1.0 + EULER_GAMMA))

WYMAN_WONG_ORDER: int = 60
# The series replaces quadrature only when its truncation error is this small.
_SERIES_ERROR_TOL: float = 1e-10


@lru_cache(maxsize=1)
def _wyman_wong_coeffs() -> ReciprocalGammaCoeffs:
    return reciprocal_gamma_coeffs(WYMAN_WONG_ORDER)


def _check_argument(name: str, z: float) -> None:
    if not z > 0.0:
        raise DomainError(f"{name} needs z > 0, got {z}.")


def _index_integral(
    log_integrand: Callable[[float], float]
) -> QuadratureResult:
    """Integrate exp(log_integrand(t)) over t in [0, inf).

    Parameters
    ----------
    log_integrand : function(float) -> float
        Logarithm of the integrand, -inf where the integrand vanishes.

    Returns
    -------
    quadrature.QuadratureResult

    """

    def integrand(t: float) -> float:
        value: float = log_integrand(t)

        return 0.0 if value == -inf else exp(value)

    return integrate_semi_infinite(integrand, 0.0, 1.0, INDEX_INTEGRAL_CONFIG)


def volterra_nu_asymptotic(
    z: float, coeffs: ReciprocalGammaCoeffs | None = None
) -> tuple[float, float]:
    """Sum the Wyman-Wong series of nu(z) for 0 < z < 1.

    nu(z) ~ sum_j a_j j! / p^(j+1) with p = -ln(z), truncated before the
    smallest-magnitude term.

    Parameters
    ----------
    z : float
        Argument in (0, 1).
    coeffs : ReciprocalGammaCoeffs, default=None
        The coefficients. If none, order 60 is used.

    Returns
    -------
    tuple of (float, float)
        The truncated sum and the magnitude of the first omitted terms,
        which bounds the truncation error.

    Raises
    ------
    DomainError
        If z is not in (0, 1).

    """
    if not 0.0 < z < 1.0:
        raise DomainError(f"Wyman-Wong series needs 0 < z < 1, got {z}.")

    a: tuple[float, ...] = (coeffs or _wyman_wong_coeffs()).coeffs
    p: float = -log(z)
    terms: list[float] = []
    factorial: float = 1.0

    for j, a_j in enumerate(a):
        if j > 0:
            factorial *= j
        terms.append(a_j * factorial / p ** (j + 1))

    # Some a_j j! are close to zero, so a term is judged with its successor.
    pair_sizes: list[float] = [
        max(abs(terms[j]), abs(terms[min(j + 1, len(terms) - 1)]))
        for j in range(len(terms))
    ]
    smallest: int = min(range(1, len(terms)), key=pair_sizes.__getitem__)

    return sum(terms[:smallest]), pair_sizes[smallest]


def volterra_nu(z: float, method: str = "auto") -> float:
    """Compute nu(z) = int_0^inf z^t / Gamma(t+1) dt.

    Parameters
    ----------
    z : float
        Positive argument.
    method : str, default='auto'
        'quadrature', 'series' (Wyman-Wong, z < 1 only) or 'auto', which
        takes the series when its error bound is below 1e-10 and falls back
        to quadrature otherwise.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If z <= 0 or the method is unknown.

    """
    _check_argument("volterra_nu", z)

    match method:
        case "series":
            return volterra_nu_asymptotic(z)[0]
        case "auto":
            if z < 1.0:
                value, error = volterra_nu_asymptotic(z)

                if error < _SERIES_ERROR_TOL:
                    return value
        case "quadrature":
            pass
        case _:
            raise DomainError(f"Unknown method '{method}' for volterra_nu.")

    log_z: float = log(z)

    return _index_integral(lambda t: t * log_z - lgamma(t + 1.0)).value


def volterra_mu(z: float, b: float, a: float = 0.0) -> float:
    """Compute the three-argument Volterra function mu(z, b, a).

    mu(z, b, a) = int_0^inf z^(a+t) t^b / (Gamma(b+1) Gamma(a+t+1)) dt,
    so that mu(z, 0, 0) = nu(z) and mu(z, b) = mu(z, b, 0).

    Parameters
    ----------
    z : float
        Positive argument.
    b : float
        Non-negative power of the index.
    a : float, default=0.0
        Shift of the index, a >= -1.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If z <= 0, b < 0 or a < -1.

    """
    _check_argument("volterra_mu", z)

    if b < 0.0 or a < -1.0:
        raise DomainError(
            f"volterra_mu needs b >= 0 and a >= -1, got b={b}, a={a}."
        )

    log_z: float = log(z)
    log_norm: float = lgamma(b + 1.0)

    def log_integrand(t: float) -> float:
        if t <= 0.0:
            return -inf

        value: float = (a + t) * log_z - log_norm - lgamma(a + t + 1.0)

        return value + b * log(t) if b > 0.0 else value

    return _index_integral(log_integrand).value


def fransen_wrigge_phi(z: float) -> float:
    """Compute phi(z) = int_0^inf z^a / Gamma(a) da.

    phi(z) = z nu'(z).

    Parameters
    ----------
    z : float
        Positive argument.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If z <= 0.

    """
    _check_argument("fransen_wrigge_phi", z)

    log_z: float = log(z)

    return _index_integral(
        lambda a: a * log_z - lgamma(a) if a > 0.0 else -inf
    ).value
