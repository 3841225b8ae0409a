"""Distribution function of |U| by Fourier inversion.

For a symmetric variable with characteristic function c(t),

    P(|U| <= u) = (2/pi) int_0^inf sin(xi)/xi c(xi/u) dxi,

which is evaluated with the half-period integrator.
"""

from dataclasses import dataclass
from logging import INFO, Logger, getLogger
from math import exp, log, log1p, pi, sqrt
from typing import Callable

from shotnoise.exceptions import DomainError, UnsupportedLawError
from shotnoise.numerics import (
    QuadratureConfig,
    QuadratureResult,
    integrate_oscillatory_sine,
)

logger: Logger = getLogger("shotnoise.inversion")
logger.setLevel(INFO)

Kernel = Callable[[float], float]

CLAMP_WARNING_LEVEL: float = 1e-3
INVERSION_CONFIG: QuadratureConfig = QuadratureConfig(abs_tol=1e-7)


@dataclass(frozen=True)
class InversionResult:
    """Class defining the outcome of a CDF inversion.

    Attributes
    ----------
    value : float
        The distribution function, clamped to [0, 1].
    raw_value : float
        The value before clamping.
    clamped : bool
        Whether clamping moved the value by more than 1e-3.
    quadrature : numerics.QuadratureResult
        The underlying oscillatory integral.

    """

    value: float
    raw_value: float
    clamped: bool
    quadrature: QuadratureResult

    def __float__(self) -> float:
        return self.value


def laplace_kernel_beta1(x: float) -> float:
    """L(x) = ln(1 + x^2) / 2."""
    return 0.5 * log1p(x * x)


def laplace_kernel_beta2(x: float) -> float:
    """L(x) = (ln(1 + x^2) + x^2 / (1 + x^2)) / 2."""
    x2: float = x * x

    return 0.5 * (log1p(x2) + x2 / (1.0 + x2))


def laplace_kernel_beta_half(x: float) -> float:
    """L(x) = ln((1 + sqrt(1 + x^2)) / 2)."""
    return log(0.5 * (1.0 + sqrt(1.0 + x * x)))


LAPLACE_KERNELS: dict[float, Kernel] = {
    0.5: laplace_kernel_beta_half,
    1.0: laplace_kernel_beta1,
    2.0: laplace_kernel_beta2,
}


def laplace_kernel(beta: float) -> Kernel:
    """Get the exponent integral L of symmetric amplitudes with shape beta.

    Parameters
    ----------
    beta : float
        One of 1/2, 1 or 2.

    Returns
    -------
    function(float) -> float

    Raises
    ------
    UnsupportedLawError
        If beta has no closed-form kernel.

    """
    try:
        return LAPLACE_KERNELS[float(beta)]

    except KeyError as err:
        raise UnsupportedLawError(
            f"No inversion kernel for Laplace amplitudes with beta={beta}."
        ) from err


def abs_cdf_from_characteristic(
    characteristic: Kernel,
    u: float,
    cfg: QuadratureConfig = INVERSION_CONFIG,
) -> InversionResult:
    """Compute P(|U| <= u) from the characteristic function of U.

    Parameters
    ----------
    characteristic : function(float) -> float
        Real, positive, non-increasing characteristic function c(t), t >= 0.
    u : float
        Positive abscissa.
    cfg : numerics.QuadratureConfig, default=INVERSION_CONFIG
        Tolerances of the oscillatory integral.

    Returns
    -------
    InversionResult

    Raises
    ------
    DomainError
        If u <= 0.

    """
    if not u > 0.0:
        raise DomainError(f"CDF inversion needs u > 0, got {u}.")

    result = integrate_oscillatory_sine(
        lambda xi: characteristic(xi / u), cfg
    )
    raw: float = 2.0 / pi * result.value
    value: float = min(max(raw, 0.0), 1.0)
    clamped: bool = abs(value - raw) > CLAMP_WARNING_LEVEL

    if clamped:
        logger.warning(
            f"Inverted CDF at u={u} clamped from {raw:.6g} to {value}."
        )

    return InversionResult(value, raw, clamped, result)


def fourier_cdf_inversion(
    kernel: Kernel,
    u: float,
    cfg: QuadratureConfig = INVERSION_CONFIG,
) -> InversionResult:
    """Compute (2/pi) int_0^inf sin(xi)/xi / (1 + L(xi/u)) dxi.

    This is P(|U| <= u) for a Gamma(1) exponent and symmetric amplitudes
    whose exponent integral is L.

    Parameters
    ----------
    kernel : function(float) -> float
        The exponent integral L, non-negative and non-decreasing.
    u : float
        Positive abscissa.
    cfg : numerics.QuadratureConfig, default=INVERSION_CONFIG
        Tolerances of the oscillatory integral.

    Returns
    -------
    InversionResult

    """
    return abs_cdf_from_characteristic(
        lambda t: 1.0 / (1.0 + kernel(t)), u, cfg
    )


def fixed_exponent_abs_cdf(
    kernel: Kernel,
    A: float,
    u: float,
    cfg: QuadratureConfig = INVERSION_CONFIG,
) -> InversionResult:
    """Compute P(|U| <= u) for a fixed exponent A, c(t) = exp(-A L(t)).

    Parameters
    ----------
    kernel : function(float) -> float
        The exponent integral L.
    A : float
        The exponent.
    u : float
        Positive abscissa.
    cfg : numerics.QuadratureConfig, default=INVERSION_CONFIG
        Tolerances of the oscillatory integral.

    Returns
    -------
    InversionResult

    """
    return abs_cdf_from_characteristic(
        lambda t: exp(-A * kernel(t)), u, cfg
    )
