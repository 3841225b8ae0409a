"""Symmetric Laplace(beta) amplitudes, fixed or Gamma(1)-mixed exponent.

Densities are even in u and built from Bessel K functions (fixed
exponent) or from phi and mu integrated against the K kernel
exp(-xi - u^2/(4 xi)) (mixed exponent). Distribution functions are those
of |U| and come from Fourier inversion.
"""

from dataclasses import dataclass
from logging import INFO, Logger, getLogger
from math import exp, inf, isfinite, lgamma, log, pi, sqrt
from typing import Callable

import numpy as np
from scipy import special

from shotnoise.exceptions import (
    ConfigurationError,
    ConvergenceError,
    DomainError,
)
from shotnoise.laws import (
    FixedExponent,
    GammaMixedExponent,
    LawSpec,
    SymmetricLaplace,
)
from shotnoise.numerics import (
    INDEX_INTEGRAL_CONFIG,
    QuadratureConfig,
    SeriesTruncation,
    bessel_I,
    bessel_K,
    fransen_wrigge_phi,
    integrate_finite,
    integrate_semi_infinite,
    volterra_mu,
)
from shotnoise.transforms import (
    fixed_exponent_abs_cdf,
    fourier_cdf_inversion,
    laplace_kernel,
)

from .base import AnalyticLaw, _even, _positive_support

logger: Logger = getLogger("shotnoise.analytic.laplace_amplitude")
logger.setLevel(INFO)

LAPLACE_SHAPES: tuple[float, ...] = (0.5, 1.0, 2.0)
SERIES_FORMS: tuple[str, ...] = ("derived", "printed")
_LAPLACE_CONFIG: QuadratureConfig = QuadratureConfig(
    abs_tol=1e-12, rel_tol=1e-8
)
# Beyond this u^2/(4 xi) the kernel exp(-u^2/(4 xi)) underflows.
_KERNEL_CUTOFF: float = 700.0
# The beta = 2 weight grows like exp(0.47 w): past this the kernel is tiny.
_BETA2_KERNEL_CUTOFF: float = 150.0


def _check_positive(u: float) -> None:
    if not u > 0.0:
        raise DomainError(f"The density needs u != 0, got {u}.")


def _kernel_integral(
    log_weight: Callable[[float, float], float],
    u: float,
    cutoff: float = _KERNEL_CUTOFF,
) -> float:
    """int_0^inf exp(-xi - w) G(w, xi) dxi with w = u^2 / (4 xi).

    log_weight(w, xi) returns ln G, or -inf. The integrand is dropped
    beyond w = cutoff. The range is split at 1 so that the steep edge at
    0 gets a panel of its own.
    """
    quarter: float = 0.25 * u * u

    def integrand(xi: float) -> float:
        if xi <= 0.0:
            return 0.0

        w: float = quarter / xi

        if w > cutoff:
            return 0.0

        log_value: float = log_weight(w, xi)

        return exp(-xi - w + log_value) if isfinite(log_value) else 0.0

    near = integrate_finite(integrand, 0.0, 1.0, _LAPLACE_CONFIG)
    far = integrate_semi_infinite(integrand, 1.0, 1.0, _LAPLACE_CONFIG)

    return near.value + far.value


def laplace_amp_beta1_density_fixedA(A: float, u: float) -> float:
    """Compute |u|^nu K_nu(|u|) / (sqrt(pi) 2^nu Gamma(A/2)), nu = (A-1)/2.

    Parameters
    ----------
    A : float
        The exponent.
    u : float
        The abscissa.

    Returns
    -------
    float

    """
    nu: float = 0.5 * (A - 1.0)
    x: float = abs(u)
    log_norm: float = 0.5 * log(pi) + nu * log(2.0) + lgamma(0.5 * A)

    if x == 0.0:
        if A <= 1.0:
            return inf

        # |u|^nu K_nu(|u|) -> Gamma(nu) 2^(nu-1)
        return exp(lgamma(nu) - lgamma(0.5 * A)) / (2.0 * sqrt(pi))

    return exp(nu * log(x) - log_norm) * bessel_K(nu, x)


def laplace_amp_beta1_density(u: float) -> float:
    """Compute the mixed density for beta = 1.

    (2 / (sqrt(pi) |u|)) int_0^inf exp(-xi - u^2/(4 xi))
    phi(u^2 / (4 e^2 xi)) xi^(-1/2) dxi

    Parameters
    ----------
    u : float
        Non-zero abscissa.

    Returns
    -------
    float

    """
    x: float = abs(u)
    _check_positive(x)

    def log_weight(w: float, xi: float) -> float:
        phi: float = fransen_wrigge_phi(w * exp(-2.0))

        return log(phi) - 0.5 * log(xi) if phi > 0.0 else -inf

    return 2.0 / (sqrt(pi) * x) * _kernel_integral(log_weight, x)


def _log_bessel_K(order: float, x: float) -> float:
    """ln K_order(x), falling back to the large-order form on overflow."""
    scaled: float = float(special.kve(order, x))

    if isfinite(scaled) and scaled > 0.0:
        return log(scaled) - x

    return lgamma(order) + (order - 1.0) * log(2.0) - order * log(x)


def laplace_amp_beta2_density_fixedA(
    A: float,
    u: float,
    trunc: SeriesTruncation = SeriesTruncation(),
) -> float:
    """Compute the fixed-exponent density for beta = 2.

    (exp(-A/2) / sqrt(pi)) (|u|/2)^((A-1)/2) sum_n (A|u|)^n
    K_{(A-1)/2+n}(|u|) / (n! Gamma(A/2+n) 4^n)

    Parameters
    ----------
    A : float
        The exponent.
    u : float
        The abscissa.
    trunc : numerics.SeriesTruncation, default=SeriesTruncation()
        The truncation rule of the series.

    Returns
    -------
    float

    Raises
    ------
    ConvergenceError
        If the series does not settle within max_terms terms.

    """
    nu: float = 0.5 * (A - 1.0)
    x: float = abs(u)

    if x == 0.0 and A <= 1.0:
        return inf

    log_front: float = -0.5 * A - 0.5 * log(pi)
    log_tol: float = log(trunc.term_tol)
    # Summed in log space: far in the tail every term underflows.
    log_total: float = -inf

    for n in range(trunc.max_terms):
        log_common: float = (
            n * log(A)
            - lgamma(n + 1.0)
            - lgamma(0.5 * A + n)
            - 2.0 * n * log(2.0)
        )

        if x == 0.0:
            # (|u|/2)^nu |u|^n K_{nu+n}(|u|) -> Gamma(nu+n) 2^(n-1)
            log_term = lgamma(nu + n) + (n - 1.0) * log(2.0)
        else:
            log_term = (
                nu * log(0.5 * x) + n * log(x) + _log_bessel_K(nu + n, x)
            )

        log_term += log_front + log_common
        log_total = float(np.logaddexp(log_total, log_term))

        if n > 0 and log_term - log_total < log_tol:
            return exp(log_total)

    raise ConvergenceError(
        f"The beta=2 K-series at u={u}, A={A} did not converge."
    )


def _log_shifted_I_series(
    t: float, y: float, trunc: SeriesTruncation
) -> float:
    """ln sum_n y^n / (n! Gamma(n + t)) for y < 1, summed in log space."""
    log_y: float = log(y)
    log_terms: list[float] = []

    for n in range(trunc.max_terms):
        log_terms.append(n * log_y - lgamma(n + 1.0) - lgamma(n + t))

        # Consecutive-term ratio; decreasing in n.
        ratio: float = y / ((n + 1.0) * (n + t))

        if ratio < 1.0 and log_terms[-1] - max(log_terms) < log(
            trunc.term_tol
        ):
            break

    return float(special.logsumexp(log_terms))


def _log_mu_diagonal_sum(w: float, trunc: SeriesTruncation) -> float:
    """ln sum_n e^(3(n-1)) mu(w/e^3, n, n-1).

    Under the index integral the sum over n is
    (1/w) sum_n (w t)^n / (n! Gamma(n + t)), that is
    (1/w) (w t)^((1-t)/2) I_{t-1}(2 sqrt(w t)). The result grows
    like exp(0.47 w), so the index integrand is finite below the kernel
    cutoff.
    """
    log_z: float = log(w) - 3.0

    def integrand(t: float) -> float:
        if t <= 0.0:
            return 0.0

        y: float = w * t

        if y < 1.0:
            log_sum: float = _log_shifted_I_series(t, y, trunc)
        else:
            x: float = 2.0 * sqrt(y)
            scaled: float = bessel_I(t - 1.0, x, scaled=True)

            if not scaled > 0.0:
                return 0.0

            log_sum = 0.5 * (1.0 - t) * log(y) + log(scaled) + x

        return exp(t * log_z + log_sum)

    index = integrate_semi_infinite(
        integrand, 0.0, 1.0, INDEX_INTEGRAL_CONFIG
    )

    if not index.value > 0.0:
        return -inf

    return log(index.value) - log(w)


def laplace_amp_beta2_density(
    u: float,
    trunc: SeriesTruncation = SeriesTruncation(max_terms=120),
    series_form: str = "derived",
) -> float:
    """Compute the mixed density for beta = 2.

    'derived': (|u| / (2 sqrt(pi))) int_0^inf exp(-xi - w) xi^(-3/2)
    sum_n e^(3(n-1)) mu(w/e^3, n, n-1) dxi, w = u^2/(4 xi), which is the
    K-series mixed over the exponent term by term.
    'printed': (2 / (sqrt(pi) |u|)) sum_n (u/2)^(2n) int_0^inf
    exp(-xi - w) mu(w/e^3, n, n-1) xi^(-1/2) dxi.

    Parameters
    ----------
    u : float
        Non-zero abscissa.
    trunc : numerics.SeriesTruncation
        The truncation rule of the sums over n.
    series_form : str, default='derived'
        Either 'derived' or 'printed'.

    Returns
    -------
    float

    Raises
    ------
    ConfigurationError
        If the series form is unknown.
    ConvergenceError
        If the printed sum over n does not settle.

    """
    if series_form not in SERIES_FORMS:
        raise ConfigurationError(
            f"Unknown series form '{series_form}', expected {SERIES_FORMS}."
        )

    x: float = abs(u)
    _check_positive(x)

    if series_form == "printed":
        return _printed_beta2_density(x, trunc)

    def log_weight(w: float, xi: float) -> float:
        return _log_mu_diagonal_sum(w, trunc) - 1.5 * log(xi)

    return (
        x
        / (2.0 * sqrt(pi))
        * _kernel_integral(log_weight, x, _BETA2_KERNEL_CUTOFF)
    )


def _printed_beta2_density(x: float, trunc: SeriesTruncation) -> float:
    total: float = 0.0

    for n in range(trunc.max_terms):

        def log_weight(w: float, xi: float, n: int = n) -> float:
            mu: float = volterra_mu(w * exp(-3.0), n, n - 1.0)

            return log(mu) - 0.5 * log(xi) if mu > 0.0 else -inf

        term: float = (0.5 * x) ** (2 * n) * _kernel_integral(log_weight, x)
        total += term

        if n > 0 and term < trunc.term_tol * total:
            return 2.0 / (sqrt(pi) * x) * total

    raise ConvergenceError(f"The printed beta=2 series at u={x} diverged.")


def laplace_amp_cdf(beta: float, u: float) -> float:
    """Compute P(|U| <= u) for a Gamma(1) exponent by Fourier inversion.

    Parameters
    ----------
    beta : float
        The amplitude shape, one of 1/2, 1 or 2.
    u : float
        The abscissa.

    Returns
    -------
    float
        Clamped to [0, 1].

    """
    if u <= 0.0:
        return 0.0

    return fourier_cdf_inversion(laplace_kernel(beta), u).value


_MIXED_DENSITIES = {
    1.0: laplace_amp_beta1_density,
    2.0: laplace_amp_beta2_density,
}
_FIXED_DENSITIES = {
    1.0: laplace_amp_beta1_density_fixedA,
    2.0: laplace_amp_beta2_density_fixedA,
}


@dataclass
class MixedLaplaceLaw(AnalyticLaw):
    """Class defining the law for a Gamma(1) exponent and Laplace amplitudes.

    Attributes
    ----------
    beta : float
        The amplitude shape, one of 1/2, 1 or 2. beta = 1/2 only has the
        distribution function of |U|.
    series_form : str, default='derived'
        The beta = 2 density series, 'derived' or 'printed'.

    """

    beta: float
    series_form: str = "derived"

    def __post_init__(self) -> None:
        if self.beta not in LAPLACE_SHAPES:
            raise self._unsupported("law")
        if self.series_form not in SERIES_FORMS:
            raise ConfigurationError(
                f"Unknown series form '{self.series_form}'."
            )

        self.has_density = self.beta in _MIXED_DENSITIES
        self.small_u_weight = 0.5 if self.has_density else None

    @property
    def spec(self) -> LawSpec:
        return LawSpec(GammaMixedExponent(1.0), SymmetricLaplace(self.beta))

    @_even
    def density(self, u: float) -> float:
        if self.beta == 2.0:
            return laplace_amp_beta2_density(
                u, series_form=self.series_form
            )
        if self.beta == 1.0:
            return laplace_amp_beta1_density(u)

        raise self._unsupported("density")

    @_positive_support
    def cdf(self, u: float) -> float:
        return laplace_amp_cdf(self.beta, u)


@dataclass
class FixedLaplaceLaw(AnalyticLaw):
    """Class defining the law for a fixed exponent and Laplace amplitudes.

    Attributes
    ----------
    A : float
        The exponent.
    beta : float
        The amplitude shape, one of 1/2, 1 or 2. beta = 1/2 only has the
        distribution function of |U|.

    """

    A: float
    beta: float

    def __post_init__(self) -> None:
        if not self.A > 0.0:
            raise DomainError(f"The exponent must be positive, got {self.A}.")
        if self.beta not in LAPLACE_SHAPES:
            raise self._unsupported("law")

        self.has_density = self.beta in _FIXED_DENSITIES

    @property
    def spec(self) -> LawSpec:
        return LawSpec(FixedExponent(self.A), SymmetricLaplace(self.beta))

    @_even
    def density(self, u: float) -> float:
        if not self.has_density:
            raise self._unsupported("density")

        return _FIXED_DENSITIES[self.beta](self.A, u)

    @_positive_support
    def cdf(self, u: float) -> float:
        if u == 0.0:
            return 0.0

        return fixed_exponent_abs_cdf(
            laplace_kernel(self.beta), self.A, u
        ).value
