"""Gamma(beta) amplitudes, fixed or Gamma(1)-mixed exponent.

Fixed-exponent densities are closed forms: a Gamma law for beta = 1, a
parabolic cylinder function for beta = 1/2 and a Bessel I function for
beta = 2. Mixing them over A ~ Exp(1) gives the phi-based densities.
"""

from dataclasses import dataclass
from logging import INFO, Logger, getLogger
from math import exp, inf, lgamma, log, pi, sqrt

from shotnoise.exceptions import ConvergenceError, DomainError
from shotnoise.laws import (
    FixedExponent,
    GammaAmplitude,
    GammaMixedExponent,
    LawSpec,
)
from shotnoise.numerics import (
    QuadratureConfig,
    SeriesTruncation,
    bessel_I,
    fransen_wrigge_phi,
    integrate_finite,
    integrate_semi_infinite,
    log_parabolic_cylinder_D,
    lower_incomplete_gamma_regularized,
    volterra_mu,
    volterra_nu,
)

from .base import AnalyticLaw, _positive_support

logger: Logger = getLogger("shotnoise.analytic.gamma_amplitude")
logger.setLevel(INFO)

GAMMA_SHAPES: tuple[float, ...] = (0.5, 1.0, 2.0)
_GAMMA_CONFIG: QuadratureConfig = QuadratureConfig(
    abs_tol=1e-12, rel_tol=1e-9
)
# exp(-745) underflows a double.
_UNDERFLOW: float = -745.0


def _check_positive(u: float) -> None:
    if not u > 0.0:
        raise DomainError(f"The density needs u > 0, got {u}.")


def gamma_amp_beta1_density(u: float) -> float:
    """Compute exp(-u) phi(u/e) / u, the mixed density for beta = 1.

    Parameters
    ----------
    u : float
        Positive abscissa.

    Returns
    -------
    float

    """
    _check_positive(u)

    return exp(-u) * fransen_wrigge_phi(u / exp(1.0)) / u


def gamma_amp_beta1_cdf(u: float) -> float:
    """Compute exp(-u) nu(u/e) + int_0^u exp(-t) nu(t/e) dt.

    The distribution function of the mixed law for beta = 1.

    Parameters
    ----------
    u : float
        Non-negative abscissa.

    Returns
    -------
    float

    """
    if u < 0.0:
        raise DomainError(f"The CDF needs u >= 0, got {u}.")
    if u == 0.0:
        return 0.0

    def nu_at(t: float) -> float:
        return volterra_nu(t / exp(1.0)) if t > 0.0 else 0.0

    running = integrate_finite(
        lambda t: exp(-t) * nu_at(t), 0.0, u, _GAMMA_CONFIG
    )

    return exp(-u) * nu_at(u) + running.value


def gamma_amp_beta1_density_fixedA(A: float, u: float) -> float:
    """Compute the Gamma(A) density u^(A-1) exp(-u) / Gamma(A).

    Parameters
    ----------
    A : float
        The exponent.
    u : float
        Non-negative abscissa.

    Returns
    -------
    float

    """
    if u == 0.0:
        return _origin_value(A, 1.0)

    return exp((A - 1.0) * log(u) - u - lgamma(A))


def _origin_value(A: float, value_at_one: float) -> float:
    """Density at 0 of a law behaving like u^(A-1) there."""
    if A < 1.0:
        return inf

    return value_at_one if A == 1.0 else 0.0


def gamma_amp_beta_half_density_fixedA(A: float, u: float) -> float:
    """Compute the fixed-exponent density for beta = 1/2.

    sqrt(2/pi) exp(-u/2) 2^(3A) A u^(A-1) D_{-(1+2A)}(sqrt(2u)),
    evaluated in logarithms.

    Parameters
    ----------
    A : float
        The exponent.
    u : float
        Non-negative abscissa.

    Returns
    -------
    float

    """
    if A < 1.0 and u == 0.0:
        return inf
    if A > 1.0 and u == 0.0:
        return 0.0

    log_value: float = (
        0.5 * log(2.0 / pi)
        - 0.5 * u
        + 3.0 * A * log(2.0)
        + log(A)
        + log_parabolic_cylinder_D(1.0 + 2.0 * A, sqrt(2.0 * u))
    )

    if u > 0.0:
        log_value += (A - 1.0) * log(u)

    return exp(log_value)


def gamma_amp_beta_half_density(u: float) -> float:
    """Compute the mixed density for beta = 1/2.

    (exp(-u) / (4u)) sqrt(2/pi) int_0^inf exp(-sqrt(2u) t - t^2/2)
    phi(2 sqrt(2u) t / sqrt(e)) dt

    Parameters
    ----------
    u : float
        Positive abscissa.

    Returns
    -------
    float

    """
    _check_positive(u)

    root: float = sqrt(2.0 * u)
    scale: float = 2.0 * root * exp(-0.5)

    def integrand(t: float) -> float:
        weight: float = -root * t - 0.5 * t * t

        if t <= 0.0 or weight < _UNDERFLOW:
            return 0.0

        return exp(weight) * fransen_wrigge_phi(scale * t)

    inner = integrate_semi_infinite(integrand, 0.0, 1.0, _GAMMA_CONFIG)

    return exp(-u) / (4.0 * u) * sqrt(2.0 / pi) * inner.value


def gamma_amp_beta2_density_fixedA(A: float, u: float) -> float:
    """Compute the fixed-exponent density for beta = 2.

    (u/A)^((A-1)/2) exp(-A-u) I_{A-1}(2 sqrt(Au)), with the exponentially
    scaled Bessel function.

    Parameters
    ----------
    A : float
        The exponent.
    u : float
        Non-negative abscissa.

    Returns
    -------
    float

    """
    if u == 0.0:
        return _origin_value(A, exp(-1.0))

    root: float = 2.0 * sqrt(A * u)
    log_prefactor: float = (
        -((sqrt(A) - sqrt(u)) ** 2) + 0.5 * (A - 1.0) * log(u / A)
    )

    return exp(log_prefactor) * bessel_I(A - 1.0, root, scaled=True)


def gamma_amp_beta2_density(
    u: float, trunc: SeriesTruncation = SeriesTruncation(max_terms=120)
) -> float:
    """Compute the mixed density for beta = 2.

    exp(-u-2) sum_k exp(2k) mu(u/e^2, k, k-1)

    Parameters
    ----------
    u : float
        Positive abscissa.
    trunc : numerics.SeriesTruncation
        The series stops once a term falls below term_tol times the sum
        while decreasing.

    Returns
    -------
    float

    Raises
    ------
    ConvergenceError
        If max_terms terms do not reach the tolerance.

    """
    _check_positive(u)

    z: float = u * exp(-2.0)
    total: float = 0.0
    previous: float = inf

    for k in range(trunc.max_terms):
        term: float = exp(2.0 * k) * volterra_mu(z, float(k), k - 1.0)
        total += term

        if term < previous and term < trunc.term_tol * total:
            return exp(-u - 2.0) * total

        previous = term

    raise ConvergenceError(
        f"The beta=2 series at u={u} did not converge in "
        f"{trunc.max_terms} terms."
    )


_MIXED_DENSITIES = {
    0.5: gamma_amp_beta_half_density,
    1.0: gamma_amp_beta1_density,
    2.0: gamma_amp_beta2_density,
}
_FIXED_DENSITIES = {
    0.5: gamma_amp_beta_half_density_fixedA,
    1.0: gamma_amp_beta1_density_fixedA,
    2.0: gamma_amp_beta2_density_fixedA,
}


@dataclass
class MixedGammaAmplitudeLaw(AnalyticLaw):
    """Class defining the law for Gamma(1) exponents and Gamma amplitudes.

    Attributes
    ----------
    beta : float
        The amplitude shape, one of 1/2, 1 or 2. Only beta = 1 has a
        distribution function.

    """

    beta: float

    def __post_init__(self) -> None:
        if self.beta not in GAMMA_SHAPES:
            raise self._unsupported("density")

        self.small_u_weight = 1.0
        self.has_cdf = self.beta == 1.0

    @property
    def spec(self) -> LawSpec:
        return LawSpec(GammaMixedExponent(1.0), GammaAmplitude(self.beta))

    @_positive_support
    def density(self, u: float) -> float:
        return _MIXED_DENSITIES[self.beta](u)

    @_positive_support
    def cdf(self, u: float) -> float:
        if not self.has_cdf:
            raise self._unsupported("distribution function")

        return gamma_amp_beta1_cdf(u)


@dataclass
class FixedGammaAmplitudeLaw(AnalyticLaw):
    """Class defining the law for a fixed exponent and Gamma(beta) amplitudes.

    Attributes
    ----------
    A : float
        The exponent.
    beta : float
        The amplitude shape, one of 1/2, 1 or 2. Only beta = 1 has a
        distribution function.

    """

    A: float
    beta: float

    def __post_init__(self) -> None:
        if not self.A > 0.0:
            raise DomainError(f"The exponent must be positive, got {self.A}.")
        if self.beta not in GAMMA_SHAPES:
            raise self._unsupported("density")

        self.has_cdf = self.beta == 1.0

    @property
    def spec(self) -> LawSpec:
        return LawSpec(FixedExponent(self.A), GammaAmplitude(self.beta))

    @_positive_support
    def density(self, u: float) -> float:
        return _FIXED_DENSITIES[self.beta](self.A, u)

    @_positive_support
    def cdf(self, u: float) -> float:
        if not self.has_cdf:
            raise self._unsupported("distribution function")

        return lower_incomplete_gamma_regularized(self.A, u)
