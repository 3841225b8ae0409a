"""Exponential-sum approximations of the stationary tail.

For a Gamma(1) exponent with deterministic amplitudes the transform is
1 / (1 + Ein(s)). Truncating Ein to N terms gives a rational function
1 / P(s) whose partial fractions turn into a sum of N exponentials.
"""

from dataclasses import dataclass
from logging import INFO, Logger, getLogger
from math import exp, sqrt

import numpy as np
from numpy.polynomial import polynomial as P

from shotnoise.exceptions import (
    ConvergenceError,
    InvalidApproximationError,
    UnsupportedLawError,
)

from .stationary import small_s_expansion_coeffs

logger: Logger = getLogger("shotnoise.tails")
logger.setLevel(INFO)

_NEWTON_STEPS: int = 3
_ROOT_RESIDUAL_TOL: float = 1e-8
_REAL_ROOT_TOL: float = 1e-10
# Density values above -this count as zero (rounding at u = 0).
_NEGATIVE_TOL: float = 1e-12

# Rates of the two-term tail: roots 2 -/+ 2 sqrt(2) of 1 + s - s^2/4.
_SLOW_RATE: float = 2.0 * sqrt(2.0) - 2.0
_FAST_RATE: float = 2.0 * sqrt(2.0) + 2.0


FloatOrArray = float | np.ndarray


@dataclass(frozen=True)
class ExponentialSumApprox:
    """Class defining a tail approximation sum_i w_i exp(-r_i u).

    Complex rates and weights come in conjugate pairs so that evaluations
    at real u are real.

    Attributes
    ----------
    rates : tuple of complex
        Decay rates, all with positive real part.
    weights : tuple of complex
        The weights.

    Methods
    -------
    density(u)
        Evaluate the approximate density.
    cdf(u)
        Evaluate the matching distribution function 1 - sum w_i/r_i e^(-r_i u).
    min_density(upper, points)
        Get the smallest density value on a grid.

    """

    rates: tuple[complex, ...]
    weights: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.rates) != len(self.weights):
            raise InvalidApproximationError(
                "Rates and weights must have the same length."
            )
        if any(rate.real <= 0.0 for rate in self.rates):
            raise InvalidApproximationError(
                f"Tail rates must decay, got {self.rates}."
            )

    @property
    def order(self) -> int:
        """Get the number of exponentials N.

        Returns
        -------
        int

        """
        return len(self.rates)

    @property
    def mass(self) -> float:
        """Get the total mass sum_i w_i / r_i of the density.

        Returns
        -------
        float

        """
        return float(
            np.real(np.sum(np.array(self.weights) / np.array(self.rates)))
        )

    def min_density(
        self, upper: float | None = None, points: int = 2001
    ) -> float:
        """Get the smallest density value on a uniform grid of [0, upper].

        Parameters
        ----------
        upper : float, default=None
            End of the grid, 20 over the slowest decay rate by default.
        points : int, default=2001
            Number of grid points.

        Returns
        -------
        float

        """
        if upper is None:
            upper = 20.0 / min(rate.real for rate in self.rates)

        grid: np.ndarray = np.linspace(0.0, upper, points)

        return float(np.min(self.density(grid)))

    @property
    def has_negative_lobe(self) -> bool:
        """Whether the density dips below zero somewhere on its tail.

        Returns
        -------
        bool

        """
        return self.min_density() < -_NEGATIVE_TOL

    def _sum(self, coeffs: np.ndarray, u: FloatOrArray) -> FloatOrArray:
        points: np.ndarray = np.asarray(u, dtype=float)
        rates: np.ndarray = np.array(self.rates)[:, np.newaxis]
        values: np.ndarray = np.real(
            np.sum(
                coeffs[:, np.newaxis] * np.exp(-rates * points.ravel()), axis=0
            )
        ).reshape(points.shape)

        return float(values) if values.ndim == 0 else values

    def density(self, u: FloatOrArray) -> FloatOrArray:
        """Evaluate sum_i w_i exp(-r_i u).

        Parameters
        ----------
        u : float or numpy.ndarray
            Non-negative abscissae.

        Returns
        -------
        float or numpy.ndarray

        """
        return self._sum(np.array(self.weights), u)

    def cdf(self, u: FloatOrArray) -> FloatOrArray:
        """Evaluate 1 - sum_i (w_i / r_i) exp(-r_i u).

        Parameters
        ----------
        u : float or numpy.ndarray
            Non-negative abscissae.

        Returns
        -------
        float or numpy.ndarray

        """
        tail = self._sum(np.array(self.weights) / np.array(self.rates), u)

        return 1.0 - tail


def _polish_roots(coeffs: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """Refine companion-matrix roots by Newton steps.

    Raises
    ------
    ConvergenceError
        If a root does not annihilate the polynomial.

    """
    derivative: np.ndarray = P.polyder(coeffs)

    for _ in range(_NEWTON_STEPS):
        roots = roots - P.polyval(roots, coeffs) / P.polyval(roots, derivative)

    residuals: np.ndarray = np.abs(P.polyval(roots, coeffs))
    scale: np.ndarray = np.abs(coeffs) @ np.abs(
        np.power.outer(roots, np.arange(coeffs.size))
    ).T

    if np.any(residuals > _ROOT_RESIDUAL_TOL * scale):
        raise ConvergenceError(
            f"Root finder did not converge, residuals {residuals}."
        )

    return roots


def _symmetrize(roots: np.ndarray) -> np.ndarray:
    """Enforce exact conjugate pairs on the roots of a real polynomial."""
    real_mask: np.ndarray = np.abs(roots.imag) <= _REAL_ROOT_TOL * np.maximum(
        np.abs(roots), 1.0
    )
    result: list[complex] = [
        complex(root.real, 0.0) for root in roots[real_mask]
    ]
    upper: list[complex] = [r for r in roots[~real_mask] if r.imag > 0.0]
    lower: list[complex] = [r for r in roots[~real_mask] if r.imag < 0.0]

    if len(upper) != len(lower):
        raise ConvergenceError(f"Unpaired complex roots: {roots}.")

    for root in upper:
        partner: complex = min(lower, key=lambda r: abs(r - root.conjugate()))
        lower.remove(partner)
        mean: complex = 0.5 * (root + partner.conjugate())
        result += [mean, mean.conjugate()]

    return np.array(result)


def exponential_sum_tail(N: int, alpha: float = 1.0) -> ExponentialSumApprox:
    """Build the N-exponential tail approximation for a Gamma(1) exponent.

    The roots s_i of P(s) = 1 + sum_k c_k s^k come from the companion
    matrix. Each partial fraction of 1 / P(s) contributes its residue
    1 / P'(s_i) as a weight. Left roots decay with rate r_i = -s_i; right
    roots are mirrored through the origin and decay with r_i = s_i. At
    N = 2 this is the two-exponential tail of tail_density_aleph. For
    larger N the density can dip below zero; such tails are returned as
    they are and logged with a warning.

    Parameters
    ----------
    N : int
        Number of terms, 2 <= N <= 20.
    alpha : float, default=1.0
        Shape of the exponent law. Only alpha = 1 is supported.

    Returns
    -------
    ExponentialSumApprox

    Raises
    ------
    UnsupportedLawError
        If alpha != 1.
    ConvergenceError
        If the root finder fails.
    InvalidApproximationError
        If a root lies on the imaginary axis.

    """
    if alpha != 1.0:
        raise UnsupportedLawError(
            f"Exponential-sum tails need alpha = 1, got {alpha}."
        )

    coeffs: np.ndarray = np.array([1.0] + small_s_expansion_coeffs(N))
    roots: np.ndarray = _symmetrize(
        _polish_roots(coeffs, P.polyroots(coeffs).astype(complex))
    )
    residues: np.ndarray = 1.0 / P.polyval(roots, P.polyder(coeffs))
    rates: np.ndarray = np.where(roots.real < 0.0, -roots, roots)

    logger.debug(f"Tail of order {N}: rates {rates}, weights {residues}.")

    tail = ExponentialSumApprox(
        tuple(complex(r) for r in rates), tuple(complex(w) for w in residues)
    )

    if tail.has_negative_lobe:
        logger.warning(
            f"The {N}-term tail density dips to {tail.min_density():.3g}."
        )

    return tail


def tail_density_aleph(u: float) -> float:
    """Compute the two-exponential tail density.

    (exp(-(2 sqrt 2 - 2) u) - exp(-(2 sqrt 2 + 2) u)) / sqrt 2

    Parameters
    ----------
    u : float
        Non-negative abscissa.

    Returns
    -------
    float

    """
    return (exp(-_SLOW_RATE * u) - exp(-_FAST_RATE * u)) / sqrt(2.0)


def tail_cdf_xi(u: float) -> float:
    """Compute the two-exponential tail distribution function.

    1 - (exp(-(2 sqrt 2 - 2) u) / (2 sqrt 2 - 2)
    - exp(-(2 sqrt 2 + 2) u) / (2 sqrt 2 + 2)) / sqrt 2,
    whose derivative is tail_density_aleph.

    Parameters
    ----------
    u : float
        Non-negative abscissa.

    Returns
    -------
    float

    """
    return 1.0 - (
        exp(-_SLOW_RATE * u) / _SLOW_RATE - exp(-_FAST_RATE * u) / _FAST_RATE
    ) / sqrt(2.0)
