"""Mixing fixed-exponent densities over a Gamma exponent law."""

from math import exp, lgamma, log
from typing import Callable

from shotnoise.exceptions import DomainError
from shotnoise.numerics import (
    QuadratureConfig,
    QuadratureResult,
    integrate_semi_infinite,
)

FixedDensity = Callable[[float, float], float]

MIXTURE_CONFIG: QuadratureConfig = QuadratureConfig(
    abs_tol=1e-10, rel_tol=1e-7
)


def mix_over_exponent(
    fixed_density: FixedDensity,
    u: float,
    alpha: float = 1.0,
    cfg: QuadratureConfig = MIXTURE_CONFIG,
) -> QuadratureResult:
    """Integrate a fixed-A density against the Gamma(alpha) law of A.

    int_0^inf a^(alpha-1) exp(-a) / Gamma(alpha) f_a(u) da

    Parameters
    ----------
    fixed_density : function(float, float) -> float
        The density f_A(u), called as fixed_density(A, u).
    u : float
        The abscissa.
    alpha : float, default=1.0
        The shape of the exponent law.
    cfg : numerics.QuadratureConfig, default=MIXTURE_CONFIG
        Tolerances of the integral over A.

    Returns
    -------
    numerics.QuadratureResult

    Raises
    ------
    DomainError
        If alpha <= 0.

    """
    if not alpha > 0.0:
        raise DomainError(f"Mixing needs alpha > 0, got {alpha}.")

    log_norm: float = lgamma(alpha)

    def integrand(a: float) -> float:
        if a <= 0.0:
            return 0.0

        weight: float = exp((alpha - 1.0) * log(a) - a - log_norm)

        return weight * fixed_density(a, u)

    return integrate_semi_infinite(integrand, 0.0, 1.0, cfg)
