"""Special functions used by the closed-form laws.

Gamma-family functions, the reciprocal-gamma Taylor coefficients, the
parabolic cylinder function of negative order and the modified Bessel
functions. The Volterra family lives in `volterra`.
"""

from dataclasses import dataclass
from functools import lru_cache
from logging import INFO, Logger, getLogger
from math import cosh, exp, log, pi, sqrt

import mpmath
import numpy as np
from scipy import special

from shotnoise.exceptions import DomainError

from .options import INDEX_INTEGRAL_CONFIG, SeriesTruncation
from .quadrature import integrate_finite, integrate_semi_infinite

logger: Logger = getLogger("shotnoise.special_functions")
logger.setLevel(INFO)

EULER_GAMMA: float = float(np.euler_gamma)
# psi(1) and psi'(1), the first Wyman-Wong coefficients in digamma form.
PSI_1: float = -EULER_GAMMA
TRIGAMMA_1: float = pi**2 / 6.0

MAX_COEFF_ORDER: int = 80


@dataclass(frozen=True)
class ReciprocalGammaCoeffs:
    """Class defining the Taylor coefficients of 1/Gamma(x+1) at x=0.

    Attributes
    ----------
    coeffs : tuple of float
        a_0, ..., a_N with a_0 = 1 and a_1 = Euler's constant.

    """

    coeffs: tuple[float, ...]

    @property
    def order(self) -> int:
        """Get the truncation order N.

        Returns
        -------
        int

        """
        return len(self.coeffs) - 1

    def evaluate(self, x: float) -> float:
        """Evaluate the truncated series sum a_j x^j.

        Parameters
        ----------
        x : float
            The evaluation point.

        Returns
        -------
        float

        """
        return float(np.polynomial.polynomial.polyval(x, self.coeffs))


def log_gamma(x: float) -> float:
    """Compute ln Gamma(x) for x > 0.

    Parameters
    ----------
    x : float
        Positive argument.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If x <= 0.

    """
    if not x > 0.0:
        raise DomainError(f"log_gamma needs x > 0, got {x}.")

    return float(special.gammaln(x))


@lru_cache(maxsize=None)
def _reciprocal_gamma_taylor(order: int) -> tuple[float, ...]:
    """Run the coefficient recurrence in multiprecision.

    With 1/Gamma(1+x) = exp(g(x)), g_1 = gamma and
    g_k = (-1)^(k+1) zeta(k) / k for k >= 2, differentiating gives
    n a_n = sum_{k=1}^{n} k g_k a_{n-k}.
    The sum cancels heavily, hence the working precision grows with n.
    """
    with mpmath.workdps(40 + 2 * order):
        g: list[mpmath.mpf] = [mpmath.mpf(0), +mpmath.euler]
        g += [
            (-1) ** (k + 1) * mpmath.zeta(k) / k for k in range(2, order + 1)
        ]
        a: list[mpmath.mpf] = [mpmath.mpf(1)]

        for n in range(1, order + 1):
            a.append(
                mpmath.fsum(k * g[k] * a[n - k] for k in range(1, n + 1)) / n
            )

        return tuple(float(value) for value in a)


def reciprocal_gamma_coeffs(N: int) -> ReciprocalGammaCoeffs:
    """Get the Taylor coefficients a_0..a_N of 1/Gamma(x+1).

    Parameters
    ----------
    N : int
        The order, 1 <= N <= 80.

    Returns
    -------
    ReciprocalGammaCoeffs

    Raises
    ------
    DomainError
        If N is out of range.

    """
    if not 1 <= N <= MAX_COEFF_ORDER:
        raise DomainError(
            f"Coefficient order must lie in [1, {MAX_COEFF_ORDER}], got {N}."
        )

    return ReciprocalGammaCoeffs(_reciprocal_gamma_taylor(N))


def lower_incomplete_gamma_regularized(alpha: float, s: float) -> float:
    """Compute P(alpha, s) = gamma(alpha, s) / Gamma(alpha).

    Parameters
    ----------
    alpha : float
        Positive shape.
    s : float
        Non-negative upper limit.

    Returns
    -------
    float
        A value in [0, 1].

    Raises
    ------
    DomainError
        If alpha <= 0 or s < 0.

    """
    if not alpha > 0.0 or s < 0.0:
        raise DomainError(
            f"P(alpha, s) needs alpha > 0 and s >= 0, got ({alpha}, {s})."
        )

    return float(special.gammainc(alpha, s))


def log_parabolic_cylinder_D(p: float, x: float) -> float:
    """Compute ln D_{-p}(x) from the integral representation.

    D_{-p}(x) = exp(-x^2/4) / Gamma(p) * int_0^inf t^(p-1) exp(-x t - t^2/2)
    The integrand is scaled by its peak value so that large orders do not
    overflow.

    Parameters
    ----------
    p : float
        Positive order magnitude (the order is -p).
    x : float
        Non-negative argument.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If p <= 0 or x < 0.

    """
    if not p > 0.0 or x < 0.0:
        raise DomainError(
            f"D_(-p)(x) needs p > 0 and x >= 0, got p={p}, x={x}."
        )

    def exponent(t: float) -> float:
        return (p - 1.0) * log(t) - x * t - 0.5 * t * t

    shift: float = 0.0

    if p > 1.0:
        peak: float = 0.5 * (-x + sqrt(x * x + 4.0 * (p - 1.0)))
        shift = exponent(peak)

    result = integrate_semi_infinite(
        lambda t: exp(exponent(t) - shift) if t > 0.0 else 0.0,
        0.0,
        1.0,
        INDEX_INTEGRAL_CONFIG,
    )

    return log(result.value) + shift - 0.25 * x * x - log_gamma(p)


def parabolic_cylinder_D(p: float, x: float) -> float:
    """Compute the parabolic cylinder function D_{-p}(x), p > 0, x >= 0.

    Parameters
    ----------
    p : float
        Positive order magnitude (the order is -p).
    x : float
        Non-negative argument.

    Returns
    -------
    float

    """
    return exp(log_parabolic_cylinder_D(p, x))


def bessel_I(order: float, x: float, scaled: bool = False) -> float:
    """Compute the modified Bessel function of the first kind I_order(x).

    Parameters
    ----------
    order : float
        Order > -1.
    x : float
        Non-negative argument.
    scaled : bool, default=False
        Return exp(-x) I_order(x), which stays finite for large x.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If order <= -1 or x < 0.

    """
    if not order > -1.0 or x < 0.0:
        raise DomainError(
            f"I_nu(x) needs nu > -1 and x >= 0, got nu={order}, x={x}."
        )

    if scaled:
        return float(special.ive(order, x))

    return float(special.iv(order, x))


def bessel_I_series(
    order: float, x: float, trunc: SeriesTruncation = SeriesTruncation()
) -> float:
    """Sum the ascending series of I_order(x).

    sum_k (x/2)^(order + 2k) / (k! Gamma(order + k + 1))

    Parameters
    ----------
    order : float
        Order > -1.
    x : float
        Non-negative argument.
    trunc : SeriesTruncation, default=SeriesTruncation()
        The truncation rule.

    Returns
    -------
    float

    """
    if not order > -1.0 or x < 0.0:
        raise DomainError(
            f"I_nu(x) needs nu > -1 and x >= 0, got nu={order}, x={x}."
        )
    if x == 0.0:
        return 1.0 if order == 0.0 else 0.0

    log_half: float = log(0.5 * x)
    total: float = 0.0

    for k in range(trunc.max_terms):
        term: float = exp(
            (order + 2 * k) * log_half
            - special.gammaln(k + 1)
            - special.gammaln(order + k + 1)
        )
        total += term

        if k > 0.5 * x and term < trunc.term_tol * total:
            break

    return total


def bessel_K(order: float, x: float) -> float:
    """Compute the MacDonald function K_order(x), x > 0.

    Parameters
    ----------
    order : float
        Real order (K is even in the order).
    x : float
        Positive argument.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If x <= 0.

    """
    if not x > 0.0:
        raise DomainError(f"K_nu(x) needs x > 0, got {x}.")

    return float(special.kv(order, x))


def bessel_K_integral(
    order: float, x: float, representation: str = "cosh"
) -> float:
    """Compute K_order(x) from one of its integral representations.

    "cosh": int_0^inf exp(-x cosh t) cosh(order t) dt.
    "laplace": (1/2) (x/2)^order int_0^inf exp(-xi - x^2/(4 xi))
    xi^(-order-1) dxi, the kernel used by the symmetric-amplitude densities.

    Parameters
    ----------
    order : float
        Real order.
    x : float
        Positive argument.
    representation : str, default='cosh'
        Either 'cosh' or 'laplace'.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If x <= 0 or the representation is unknown.

    """
    if not x > 0.0:
        raise DomainError(f"K_nu(x) needs x > 0, got {x}.")

    match representation:
        case "cosh":
            return integrate_semi_infinite(
                lambda t: exp(-x * cosh(t)) * cosh(order * t),
                0.0,
                1.0,
                INDEX_INTEGRAL_CONFIG,
            ).value
        case "laplace":
            scale: float = 0.5 * (0.5 * x) ** order
            near_zero = integrate_finite(
                lambda xi: exp(-xi - x * x / (4.0 * xi)) * xi ** (-order - 1),
                0.0,
                1.0,
                INDEX_INTEGRAL_CONFIG,
            )
            far = integrate_semi_infinite(
                lambda xi: exp(-xi - x * x / (4.0 * xi)) * xi ** (-order - 1),
                1.0,
                1.0,
                INDEX_INTEGRAL_CONFIG,
            )
            return scale * (near_zero.value + far.value)
        case _:
            raise DomainError(
                f"Unknown representation '{representation}' for K_nu."
            )
