"""Gamma-mixed exponent with amplitudes equal to 1.

For a Gamma(1) exponent the law is built from phi and nu evaluated at
c u, c = exp(-(1 + gamma)), on [0, 1] and (1, 2], and from the
two-exponential tail beyond 2. For a general shape alpha only the
unit interval has a closed form, through the Volterra mu function.
"""

from dataclasses import dataclass
from logging import INFO, Logger, getLogger

from shotnoise.exceptions import ConfigurationError, DomainError
from shotnoise.laws import DeterministicOne, GammaMixedExponent, LawSpec
from shotnoise.numerics import (
    QuadratureConfig,
    Z_SWITCH,
    fransen_wrigge_phi,
    integrate_finite,
    volterra_mu,
    volterra_nu,
)
from shotnoise.transforms import tail_cdf_xi, tail_density_aleph

from .base import AnalyticLaw, _positive_support

logger: Logger = getLogger("shotnoise.analytic.mixed_deterministic")
logger.setLevel(INFO)

TAIL_CONVENTIONS: tuple[str, ...] = ("corrected", "printed")
_HANDOFF_WARNING_LEVEL: float = 1e-2
_SECOND_INTERVAL_CONFIG: QuadratureConfig = QuadratureConfig(
    abs_tol=1e-10, rel_tol=1e-8
)


def _phi_at(z: float) -> float:
    return fransen_wrigge_phi(z) if z > 0.0 else 0.0


def _nu_at(z: float) -> float:
    return volterra_nu(z) if z > 0.0 else 0.0


def mixed_alpha1_density(u: float) -> float:
    """Compute the density for a Gamma(1) exponent and unit amplitudes.

    phi(cu)/u on (0, 1];
    phi(cu)/u - phi(c(u-1)) + (1/u) int_1^u phi(cu(1 - 1/xi)) dxi on (1, 2);
    the two-exponential tail density from 2 on.

    Parameters
    ----------
    u : float
        Positive abscissa.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If u <= 0.

    """
    if not u > 0.0:
        raise DomainError(f"The mixed density needs u > 0, got {u}.")

    if u > 2.0:
        return tail_density_aleph(u)

    return _exact_density(u)


def _exact_density(u: float) -> float:
    """Evaluate the phi formulas on (0, 2]."""
    c: float = Z_SWITCH
    head: float = fransen_wrigge_phi(c * u) / u

    if u <= 1.0:
        return head

    inner = integrate_finite(
        lambda xi: _phi_at(c * u * (1.0 - 1.0 / xi)),
        1.0,
        u,
        _SECOND_INTERVAL_CONFIG,
    )

    return head - _phi_at(c * (u - 1.0)) + inner.value / u


def _exact_cdf(u: float) -> float:
    """Evaluate the nu formulas on [0, 2]."""
    c: float = Z_SWITCH
    head: float = _nu_at(c * u)

    if u <= 1.0:
        return head

    inner = integrate_finite(
        lambda xi: _nu_at(c * u * (1.0 - 1.0 / xi)),
        1.0,
        u,
        _SECOND_INTERVAL_CONFIG,
    )

    return head - (u - 1.0) * _nu_at(c * (u - 1.0)) + inner.value


def mixed_alpha1_cdf(u: float, tail_convention: str = "corrected") -> float:
    """Compute the distribution function for a Gamma(1) exponent.

    nu(cu) on [0, 1];
    nu(cu) - (u-1) nu(c(u-1)) + int_1^u nu(cu(1 - 1/xi)) dxi on (1, 2];
    beyond 2, F(2) + Xi(u) - Xi(2) ('corrected', non-decreasing) or
    F(2) + Xi(2) - Xi(u) ('printed').

    Parameters
    ----------
    u : float
        Non-negative abscissa.
    tail_convention : str, default='corrected'
        Either 'corrected' or 'printed'.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If u < 0.
    ConfigurationError
        If the tail convention is unknown.

    """
    if tail_convention not in TAIL_CONVENTIONS:
        raise ConfigurationError(
            f"Unknown tail convention '{tail_convention}', "
            f"expected one of {TAIL_CONVENTIONS}."
        )
    if u < 0.0:
        raise DomainError(f"The mixed CDF needs u >= 0, got {u}.")

    if u <= 2.0:
        return _exact_cdf(u)

    shift: float = tail_cdf_xi(u) - tail_cdf_xi(2.0)

    if tail_convention == "printed":
        shift = -shift

    return _exact_cdf(2.0) + shift


def mixed_unit_interval_density(alpha: float, u: float) -> float:
    """Compute the density on (0, 1] for a Gamma(alpha) exponent.

    c mu(cu, alpha - 1, -1), which is phi(cu)/u at alpha = 1.

    Parameters
    ----------
    alpha : float
        The shape of the exponent law.
    u : float
        Abscissa in (0, 1].

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If u is outside (0, 1].

    """
    if not 0.0 < u <= 1.0:
        raise DomainError(f"Closed form holds on (0, 1], got u={u}.")

    return Z_SWITCH * volterra_mu(Z_SWITCH * u, alpha - 1.0, -1.0)


def mixed_unit_interval_cdf(alpha: float, u: float) -> float:
    """Compute the distribution function on [0, 1] for a Gamma(alpha) exponent.

    mu(cu, alpha - 1), which is nu(cu) at alpha = 1.

    Parameters
    ----------
    alpha : float
        The shape of the exponent law.
    u : float
        Abscissa in [0, 1].

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If u is outside [0, 1].

    """
    if not 0.0 <= u <= 1.0:
        raise DomainError(f"Closed form holds on [0, 1], got u={u}.")
    if u == 0.0:
        return 0.0

    return volterra_mu(Z_SWITCH * u, alpha - 1.0)


@dataclass(frozen=True)
class HandoffGap:
    """Class defining the mismatch between exact and tail densities at 2.

    Attributes
    ----------
    exact : float
        The phi formula at u = 2.
    tail : float
        The two-exponential tail density at u = 2.

    """

    exact: float
    tail: float

    @property
    def absolute(self) -> float:
        """Get |exact - tail|.

        Returns
        -------
        float

        """
        return abs(self.exact - self.tail)

    @property
    def relative(self) -> float:
        """Get |exact - tail| / exact.

        Returns
        -------
        float

        """
        return self.absolute / abs(self.exact)


def tail_handoff_gap() -> HandoffGap:
    """Measure the density jump where the tail approximation takes over.

    The distribution function is continuous at 2 by construction.

    Returns
    -------
    HandoffGap

    """
    gap = HandoffGap(_exact_density(2.0), tail_density_aleph(2.0))

    if gap.relative > _HANDOFF_WARNING_LEVEL:
        logger.warning(
            f"Density jumps by {gap.absolute:.4g} ({gap.relative:.1%}) at u=2 "
            "where the two-exponential tail takes over."
        )

    return gap


@dataclass
class MixedDeterministicLaw(AnalyticLaw):
    """Class defining the law for a Gamma(alpha) exponent and unit amplitudes.

    Attributes
    ----------
    alpha : float, default=1.0
        The shape of the exponent law. Beyond u = 1 only alpha = 1 has a
        closed form.
    tail_convention : str, default='corrected'
        Tail of the distribution function, 'corrected' or 'printed'.

    """

    alpha: float = 1.0
    tail_convention: str = "corrected"

    def __post_init__(self) -> None:
        if self.tail_convention not in TAIL_CONVENTIONS:
            raise ConfigurationError(
                f"Unknown tail convention '{self.tail_convention}'."
            )

        self.small_u_weight = self.alpha
        self.small_u_power = self.alpha

    @property
    def spec(self) -> LawSpec:
        return LawSpec(GammaMixedExponent(self.alpha), DeterministicOne())

    @_positive_support
    def density(self, u: float) -> float:
        if self.alpha == 1.0:
            return mixed_alpha1_density(u)
        if u <= 1.0:
            return mixed_unit_interval_density(self.alpha, u)

        raise self._unsupported("density beyond u=1")

    @_positive_support
    def cdf(self, u: float) -> float:
        if self.alpha == 1.0:
            return mixed_alpha1_cdf(u, self.tail_convention)
        if u <= 1.0:
            return mixed_unit_interval_cdf(self.alpha, u)

        raise self._unsupported("distribution function beyond u=1")

    def handoff_gap(self) -> HandoffGap:
        """Measure the density jump at u = 2 (alpha = 1 only).

        Returns
        -------
        HandoffGap

        """
        if self.alpha != 1.0:
            raise self._unsupported("tail approximation")

        return tail_handoff_gap()
