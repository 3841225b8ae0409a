"""Numerical integration kernel.

Every analytic evaluation of the library goes through one of the three
integrators below: finite adaptive integrals, semi-infinite integrals of
eventually decaying functions, and slowly convergent sine-kernel integrals
over the half line.
"""

from dataclasses import dataclass
from logging import DEBUG, INFO, Logger, getLogger
from math import isnan, pi
from typing import Callable

import numpy as np
from scipy.integrate import quad

from shotnoise.exceptions import DomainError, IntegrandError

from .options import QuadratureConfig

logger: Logger = getLogger("shotnoise.quadrature")
logger.setLevel(INFO)

Integrand = Callable[[float], float]

DEFAULT_CONFIG: QuadratureConfig = QuadratureConfig()

# Width, in units of 1/decay_hint, of a semi-infinite panel.
_PANEL_WIDTH: float = 4.0
# Partial sums entering one Euler averaging table.
_EULER_WINDOW: int = 48
_HALF_PERIOD_CHUNK: int = 64


@dataclass(frozen=True)
class QuadratureResult:
    """Class defining the outcome of a numerical integral.

    Attributes
    ----------
    value : float
        The integral estimate.
    error_estimate : float
        The estimated absolute error (>= 0).
    converged : bool
        Whether the requested tolerance was reached.
    evaluations : int
        Number of integrand evaluations.

    """

    value: float
    error_estimate: float
    converged: bool
    evaluations: int

    def __float__(self) -> float:
        return self.value


class _CountingIntegrand:
    """Wrap an integrand to count calls and reject NaN values."""

    def __init__(self, func: Integrand) -> None:
        self._func: Integrand = func
        self.calls: int = 0

    def __call__(self, x: float) -> float:
        self.calls += 1
        y: float = float(self._func(x))

        if isnan(y):
            raise IntegrandError(f"Integrand returned NaN at x={x!r}.")

        return y


def _set_debug(cfg: QuadratureConfig) -> None:
    if cfg.debug:
        logger.setLevel(DEBUG)


def _quad_panel(
    func: _CountingIntegrand,
    a: float,
    b: float,
    abs_tol: float,
    cfg: QuadratureConfig,
) -> tuple[float, float, bool]:
    """Integrate one panel with QUADPACK's 21-point Gauss-Kronrod pair.

    Parameters
    ----------
    func : _CountingIntegrand
        The wrapped integrand.
    a, b : float
        The panel bounds.
    abs_tol : float
        Absolute tolerance for this panel.
    cfg : QuadratureConfig
        Relative tolerance and subdivision budget.

    Returns
    -------
    tuple of (float, float, bool)
        Value, error estimate and convergence flag.

    """
    out = quad(
        func,
        a,
        b,
        epsabs=abs_tol,
        epsrel=cfg.rel_tol,
        limit=cfg.max_subdivisions,
        full_output=1,
    )
    value, error = float(out[0]), float(out[1])
    # QUADPACK appends a message only when ier != 0.
    converged: bool = len(out) == 3 and error <= max(
        abs_tol, cfg.rel_tol * abs(value)
    )

    if len(out) > 3:
        logger.debug(f"QUADPACK on [{a}, {b}]: {out[3]}")

    return value, error, converged


def integrate_finite(
    f: Integrand,
    a: float,
    b: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> QuadratureResult:
    """Integrate f over the finite interval [a, b].

    Endpoint singularities of power type with exponent > -1 are handled by
    QUADPACK's bisection toward the endpoint combined with extrapolation.

    Parameters
    ----------
    f : function(float) -> float
        The integrand.
    a, b : float
        The bounds, a <= b.
    cfg : QuadratureConfig, default=DEFAULT_CONFIG
        The tolerances.

    Returns
    -------
    QuadratureResult
        converged=False when the subdivision budget is exhausted.

    Raises
    ------
    DomainError
        If a > b.
    IntegrandError
        If f returns NaN.

    """
    _set_debug(cfg)

    if a > b:
        raise DomainError(f"integrate_finite needs a <= b, got [{a}, {b}].")
    if a == b:
        return QuadratureResult(0.0, 0.0, True, 0)

    func = _CountingIntegrand(f)
    value, error, converged = _quad_panel(func, a, b, cfg.abs_tol, cfg)

    if not converged:
        logger.warning(
            f"Finite integral on [{a}, {b}] did not converge: "
            f"value={value:.12g}, error={error:.3g}."
        )

    return QuadratureResult(value, error, converged, func.calls)


def integrate_semi_infinite(
    f: Integrand,
    a: float,
    decay_hint: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> QuadratureResult:
    """Integrate f over [a, +inf) by panel summation.

    Panels of width 4/decay_hint are summed until a panel contributes less
    than a tenth of the tolerance and is not larger than the previous one.

    Parameters
    ----------
    f : function(float) -> float
        The integrand, |f(x)| <= C exp(-decay_hint x) eventually.
    a : float
        The lower bound.
    decay_hint : float
        Positive exponential decay rate hint.
    cfg : QuadratureConfig, default=DEFAULT_CONFIG
        The tolerances; max_subdivisions bounds the number of panels.

    Returns
    -------
    QuadratureResult
        converged=False when the decay is not observed within budget.

    Raises
    ------
    DomainError
        If decay_hint <= 0.
    IntegrandError
        If f returns NaN.

    """
    _set_debug(cfg)

    if not decay_hint > 0.0:
        raise DomainError(f"decay_hint must be positive, got {decay_hint}.")

    func = _CountingIntegrand(f)
    width: float = _PANEL_WIDTH / decay_hint
    total: float = 0.0
    error: float = 0.0
    previous: float = float("inf")
    all_converged: bool = True
    left: float = a

    for _ in range(cfg.max_subdivisions):
        panel, panel_error, converged = _quad_panel(
            func, left, left + width, cfg.abs_tol / 10.0, cfg
        )
        total += panel
        error += panel_error
        all_converged = all_converged and converged
        left += width

        if (
            abs(panel) < cfg.tolerance_for(total) / 10.0
            and abs(panel) <= previous
        ):
            error += abs(panel)
            return QuadratureResult(
                total, error, all_converged, func.calls
            )

        previous = abs(panel)

    logger.warning(
        f"Semi-infinite integral from {a} did not show decay within "
        f"{cfg.max_subdivisions} panels (last panel {previous:.3g})."
    )

    return QuadratureResult(total, error + previous, False, func.calls)


def _euler_average(partial_sums: np.ndarray) -> float:
    """Accelerate an alternating series by repeated averaging.

    Parameters
    ----------
    partial_sums : numpy.ndarray
        Consecutive partial sums S_m, ..., S_{m+w}.

    Returns
    -------
    float
        The Euler-transformed limit estimate.

    """
    table: np.ndarray = np.asarray(partial_sums, dtype=float)

    while table.size > 1:
        table = 0.5 * (table[:-1] + table[1:])

    return float(table[0])


def integrate_oscillatory_sine(
    h: Integrand,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> QuadratureResult:
    """Compute the integral over [0, inf) of sin(xi)/xi * h(xi).

    The integral is split at the zeros k*pi of the sine; the half-period
    contributions alternate in sign and their partial sums are accelerated
    by Euler's transform (repeated averaging over a sliding window).

    Parameters
    ----------
    h : function(float) -> float
        Positive weight, monotone or slowly varying, possibly decaying
        slower than 1/xi.
    cfg : QuadratureConfig, default=DEFAULT_CONFIG
        The tolerances; oscillatory_max_half_periods bounds the work.

    Returns
    -------
    QuadratureResult
        converged=False when the accelerated estimates do not settle.

    Raises
    ------
    IntegrandError
        If h returns NaN.

    """
    _set_debug(cfg)

    func = _CountingIntegrand(lambda x: float(np.sinc(x / pi)) * h(x))
    sums: list[float] = []
    running: float = 0.0
    quad_error: float = 0.0
    estimate: float = 0.0
    spread: float = float("inf")
    budget: int = cfg.oscillatory_max_half_periods

    while len(sums) < budget:
        stop: int = min(len(sums) + _HALF_PERIOD_CHUNK, budget)

        for k in range(len(sums), stop):
            panel, panel_error, _ = _quad_panel(
                func, k * pi, (k + 1) * pi, cfg.abs_tol / 100.0, cfg
            )
            running += panel
            quad_error += panel_error
            sums.append(running)

        window: int = min(_EULER_WINDOW, len(sums) - 2)

        if window < 2:
            continue

        estimate = _euler_average(np.array(sums[-window - 1 :]))
        shifted: float = _euler_average(np.array(sums[-window - 2 : -1]))
        spread = abs(estimate - shifted)

        if spread < cfg.tolerance_for(estimate):
            return QuadratureResult(
                estimate, spread + quad_error, True, func.calls
            )

    logger.warning(
        f"Oscillatory integral not converged after {len(sums)} "
        f"half-periods (spread {spread:.3g})."
    )

    return QuadratureResult(estimate, spread + quad_error, False, func.calls)
