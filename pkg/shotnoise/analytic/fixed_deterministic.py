"""Fixed exponent A with amplitudes equal to 1.

The stationary density is c u^(A-1) on [0, 1], c = exp(-gamma A)/Gamma(A),
and satisfies the delay equation u f'(u) + (1 - A) f(u) = -A f(u - 1).
Written for g(u) = u^(1-A) f(u) it reads g'(u) = -A u^(-A) f(u - 1), which
is integrated interval by interval (method of steps).
"""

from dataclasses import dataclass
from functools import lru_cache
from logging import INFO, Logger, getLogger
from math import ceil, exp, inf, lgamma

import numpy as np
from scipy import special
from scipy.integrate import cumulative_trapezoid, trapezoid

from shotnoise.exceptions import DomainError
from shotnoise.laws import DeterministicOne, FixedExponent, LawSpec
from shotnoise.numerics import EULER_GAMMA, QuadratureConfig, integrate_finite

from .base import AnalyticLaw, _positive_support

logger: Logger = getLogger("shotnoise.analytic.fixed_deterministic")
logger.setLevel(INFO)

DEFAULT_STEP: float = 1e-3
MAX_STEP: float = 0.01
_TABLE_UNITS: int = 12
_RICHARDSON_TOL: float = 1e-6
_SECOND_INTERVAL_CONFIG: QuadratureConfig = QuadratureConfig(
    abs_tol=1e-12, rel_tol=1e-10
)


def _check_exponent(A: float) -> None:
    if not A > 0.0:
        raise DomainError(f"The exponent must be positive, got A={A}.")


def unit_interval_constant(A: float) -> float:
    """Get c = exp(-gamma A) / Gamma(A), the density on [0, 1] over u^(A-1).

    Parameters
    ----------
    A : float
        The exponent.

    Returns
    -------
    float

    """
    return exp(-EULER_GAMMA * A - lgamma(A))


def _unit_density(A: float, u: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return unit_interval_constant(A) * np.power(u, A - 1.0)


def _second_interval_integral(A: float, u: np.ndarray) -> np.ndarray:
    """int_1^u (eta-1)^(A-1) eta^(-A) deta = x^A 2F1(1, A; A+1; x) / A.

    With x = 1 - 1/u, which lies in [0, 1/2] on the second interval.
    """
    x: np.ndarray = 1.0 - 1.0 / u

    return np.power(x, A) * special.hyp2f1(1.0, A, A + 1.0, x) / A


@dataclass(frozen=True, eq=False)
class DelayTable:
    """Class defining a tabulated density on [0, u_max].

    Attributes
    ----------
    A : float
        The exponent.
    step : float
        The grid step; 1/step is an integer.
    u : numpy.ndarray
        The grid, starting at 0 and containing every integer.
    f : numpy.ndarray
        The density on the grid (inf at 0 when A < 1).
    richardson_gap : float, default=None
        Largest difference on [2, 3] with the table of half step.

    Methods
    -------
    density(u)
        Interpolate the density.
    mass()
        Integrate the density over the table.

    """

    A: float
    step: float
    u: np.ndarray
    f: np.ndarray
    richardson_gap: float | None = None

    @property
    def u_max(self) -> float:
        """Get the end of the table.

        Returns
        -------
        float

        """
        return float(self.u[-1])

    def density(self, u: float) -> float:
        """Interpolate the density linearly.

        Parameters
        ----------
        u : float
            Abscissa in [0, u_max].

        Returns
        -------
        float

        Raises
        ------
        DomainError
            If u is outside the table.

        """
        if not 0.0 <= u <= self.u_max:
            raise DomainError(f"u={u} lies outside [0, {self.u_max}].")

        return float(np.interp(u, self.u, self.f))

    def mass(self) -> float:
        """Integrate the density over [0, u_max].

        The unit interval is integrated exactly, the rest by the
        trapezoidal rule.

        Returns
        -------
        float

        """
        start: int = int(round(1.0 / self.step))

        return unit_interval_constant(self.A) / self.A + float(
            trapezoid(self.f[start:], self.u[start:])
        )


def _march(A: float, units: int, per_unit: int) -> tuple[np.ndarray, ...]:
    """Tabulate the density on [0, units] with per_unit points per unit."""
    u: np.ndarray = np.arange(units * per_unit + 1) / per_unit
    f: np.ndarray = np.empty_like(u)
    one, two = per_unit, 2 * per_unit
    c: float = unit_interval_constant(A)

    f[: one + 1] = _unit_density(A, u[: one + 1])
    second: np.ndarray = u[one : two + 1]
    f[one : two + 1] = (
        c
        * np.power(second, A - 1.0)
        * (1.0 - A * _second_interval_integral(A, second))
    )

    for n in range(2, units):
        left, right = n * per_unit, (n + 1) * per_unit
        segment: np.ndarray = u[left : right + 1]
        delayed: np.ndarray = f[left - per_unit : right - per_unit + 1]
        g_start: float = u[left] ** (1.0 - A) * f[left]
        g: np.ndarray = g_start - A * cumulative_trapezoid(
            np.power(segment, -A) * delayed, segment, initial=0.0
        )
        f[left : right + 1] = g * np.power(segment, A - 1.0)

    return u, f


def solve_delay_dde(
    A: float,
    u_max: float,
    step: float = DEFAULT_STEP,
    check: bool = True,
) -> DelayTable:
    """Tabulate the fixed-exponent density by the method of steps.

    [0, 1] and (1, 2] use their closed forms; each later interval [n, n+1]
    integrates g(u) = g(n) - A int_n^u eta^(-A) f(eta - 1) deta with the
    trapezoidal rule on the previous interval's values.

    Parameters
    ----------
    A : float
        The exponent.
    u_max : float
        End of the table, u_max > 2 (rounded up to an integer).
    step : float, default=1e-3
        The grid step, at most 0.01, with 1/step an integer.
    check : bool, default=True
        Whether to compare [2, 3] with a half-step table.

    Returns
    -------
    DelayTable

    Raises
    ------
    DomainError
        If A <= 0, u_max <= 2 or the step is rejected.

    """
    _check_exponent(A)

    if not u_max > 2.0:
        raise DomainError(f"u_max must exceed 2, got {u_max}.")
    if not 0.0 < step <= MAX_STEP:
        raise DomainError(f"Step must lie in (0, {MAX_STEP}], got {step}.")

    per_unit: int = int(round(1.0 / step))

    if abs(per_unit * step - 1.0) > 1e-9:
        raise DomainError(f"1/step must be an integer, got step={step}.")

    u, f = _march(A, int(ceil(u_max)), per_unit)
    gap: float | None = None

    if check:
        _, fine = _march(A, 3, 2 * per_unit)
        coarse: np.ndarray = f[2 * per_unit : 3 * per_unit + 1]
        gap = float(np.max(np.abs(coarse - fine[4 * per_unit :: 2])))

        if gap > _RICHARDSON_TOL:
            logger.warning(
                f"Delay table for A={A}, step={step}: halving the step "
                f"moves [2, 3] by {gap:.3g}."
            )

    return DelayTable(A, step, u, f, gap)


@lru_cache(maxsize=32)
def _cached_table(A: float, step: float, units: int) -> DelayTable:
    return solve_delay_dde(A, units, step)


def _tail_density(A: float, u: float, step: float) -> float:
    units: int = max(_TABLE_UNITS, int(ceil(u)))

    return _cached_table(A, step, units).density(u)


def fixed_A_density(A: float, u: float, step: float = DEFAULT_STEP) -> float:
    """Compute the stationary density for a fixed exponent A.

    0 for u < 0, c u^(A-1) on [0, 1],
    c u^(A-1) (1 - A int_1^u (eta-1)^(A-1) / eta^A deta) on (1, 2]
    and the delay-equation table beyond.

    Parameters
    ----------
    A : float
        The exponent.
    u : float
        The abscissa.
    step : float, default=1e-3
        The delay table step used for u > 2.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If A <= 0.

    """
    _check_exponent(A)

    if u < 0.0:
        return 0.0
    if u == 0.0:
        if A < 1.0:
            return inf

        return unit_interval_constant(A) if A == 1.0 else 0.0
    if u <= 1.0:
        return unit_interval_constant(A) * u ** (A - 1.0)
    if u > 2.0:
        return _tail_density(A, u, step)

    inner = integrate_finite(
        lambda eta: (eta - 1.0) ** (A - 1.0) * eta ** (-A),
        1.0,
        u,
        _SECOND_INTERVAL_CONFIG,
    )

    c: float = unit_interval_constant(A)

    return c * u ** (A - 1.0) * (1.0 - A * inner.value)


def fixed_A_cdf(A: float, u: float, step: float = DEFAULT_STEP) -> float:
    """Compute the stationary distribution function for a fixed exponent A.

    c u^A / A on [0, 1], then F(u) = F(u - 1) + u f(u) / A, which follows
    from the fixed-point equation and reproduces the closed form on (1, 2].

    Parameters
    ----------
    A : float
        The exponent.
    u : float
        The abscissa.
    step : float, default=1e-3
        The delay table step used for u > 2.

    Returns
    -------
    float

    Raises
    ------
    DomainError
        If A <= 0.

    """
    _check_exponent(A)

    if u <= 0.0:
        return 0.0
    if u <= 1.0:
        return unit_interval_constant(A) * u**A / A

    return fixed_A_cdf(A, u - 1.0, step) + u * fixed_A_density(A, u, step) / A


@dataclass
class FixedDeterministicLaw(AnalyticLaw):
    """Class defining the law for a fixed exponent and unit amplitudes.

    Attributes
    ----------
    A : float
        The exponent.
    step : float, default=1e-3
        The delay table step.

    """

    A: float
    step: float = DEFAULT_STEP

    def __post_init__(self) -> None:
        _check_exponent(self.A)

    @property
    def spec(self) -> LawSpec:
        return LawSpec(FixedExponent(self.A), DeterministicOne())

    @_positive_support
    def density(self, u: float) -> float:
        return fixed_A_density(self.A, u, self.step)

    @_positive_support
    def cdf(self, u: float) -> float:
        return fixed_A_cdf(self.A, u, self.step)

    def table(self, u_max: float = _TABLE_UNITS) -> DelayTable:
        """Get the delay-equation table up to u_max.

        Parameters
        ----------
        u_max : float, default=12
            End of the table.

        Returns
        -------
        DelayTable

        """
        return _cached_table(self.A, self.step, int(ceil(u_max)))
