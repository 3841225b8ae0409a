"""Built-in checks of the numerical kernel against known values."""

import time
from dataclasses import dataclass, field
from logging import INFO, Logger, getLogger
from math import e, exp, inf, log, pi, sqrt
from typing import Callable, TextIO

from shotnoise.analytic import (
    AnalyticLaw,
    FixedDeterministicLaw,
    MixedDeterministicLaw,
    fixed_A_density,
    gamma_amp_beta2_density,
    gamma_amp_beta2_density_fixedA,
    mix_over_exponent,
    mixed_alpha1_density,
    solve_delay_dde,
)
from shotnoise.exceptions import ShotNoiseError
from shotnoise.laws import LawSpec
from shotnoise.numerics import (
    EULER_GAMMA,
    Z_SWITCH,
    fransen_wrigge_phi,
    integrate_finite,
    integrate_oscillatory_sine,
    integrate_semi_infinite,
    reciprocal_gamma_coeffs,
    volterra_nu,
)
from shotnoise.simulator import ChainConfig, sample_stationary
from shotnoise.transforms import exponential_sum_tail, law_transform

logger: Logger = getLogger("shotnoise.selfcheck")
logger.setLevel(INFO)

LEVELS: tuple[str, ...] = ("quick", "full")
# Second Taylor coefficient of 1/Gamma(x+1).
A_2: float = -0.6558780715202538

# A check returns (error, tolerance).
CheckFunction = Callable[[], tuple[float, float]]


@dataclass(frozen=True)
class CheckOutcome:
    """Class defining the result of one check.

    Attributes
    ----------
    name : str
        What was checked.
    error : float
        The observed error; inf when the check raised.
    tolerance : float
        The largest error accepted.
    seconds : float
        Wall-clock duration.
    detail : str, default=''
        The error message when the check raised.

    """

    name: str
    error: float
    tolerance: float
    seconds: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        """Whether the error is within tolerance."""
        return self.error <= self.tolerance

    @property
    def margin(self) -> float:
        """Get tolerance / error, inf for an exact result.

        Returns
        -------
        float

        """
        if self.error == 0.0:
            return inf

        return self.tolerance / self.error

    def __str__(self) -> str:
        status: str = "PASS" if self.passed else "FAIL"
        line: str = (
            f"{status} {self.name}: error={self.error:.3g} "
            f"tol={self.tolerance:.3g} margin={self.margin:.3g} "
            f"({self.seconds:.2f}s)"
        )

        return f"{line} {self.detail}" if self.detail else line


@dataclass(frozen=True)
class SelfCheckReport:
    """Class grouping the outcomes of a self-check run.

    Attributes
    ----------
    level : str
        'quick' or 'full'.
    outcomes : tuple of CheckOutcome
        One per check, in run order.

    """

    level: str
    outcomes: tuple[CheckOutcome, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(outcome.passed for outcome in self.outcomes)

    @property
    def exit_code(self) -> int:
        """Get 0 when every check passed, 1 otherwise."""
        return 0 if self.passed else 1

    def write(self, stream: TextIO) -> None:
        """Write one line per check then a summary line.

        Parameters
        ----------
        stream : TextIO
            The output.

        """
        for outcome in self.outcomes:
            stream.write(f"{outcome}\n")

        failed: int = sum(not outcome.passed for outcome in self.outcomes)
        stream.write(
            f"# selfcheck {self.level}: {len(self.outcomes) - failed} "
            f"passed, {failed} failed\n"
        )


def _check_singular_endpoint() -> tuple[float, float]:
    result = integrate_finite(lambda x: x**-0.5, 0.0, 1.0)

    return abs(result.value - 2.0), 1e-8


def _check_semi_infinite() -> tuple[float, float]:
    result = integrate_semi_infinite(lambda x: exp(-x), 0.0, 1.0)

    return abs(result.value - 1.0), 1e-8


def _check_sine_integral() -> tuple[float, float]:
    result = integrate_oscillatory_sine(lambda x: 1.0)

    return abs(result.value - 0.5 * pi), 1e-6


def _check_reciprocal_gamma() -> tuple[float, float]:
    coeffs: tuple[float, ...] = reciprocal_gamma_coeffs(4).coeffs
    error: float = max(
        abs(coeffs[1] - EULER_GAMMA), abs(coeffs[2] - A_2) * 1e-3
    )

    return error, 1e-12


def _check_nu_methods() -> tuple[float, float]:
    z: float = 1e-3
    series: float = volterra_nu(z, method="series")
    quadrature: float = volterra_nu(z, method="quadrature")

    return abs(series - quadrature), 1e-7


def _check_phi_derivative() -> tuple[float, float]:
    z, h = 0.5, 1e-4
    derivative: float = (volterra_nu(z + h) - volterra_nu(z - h)) / (2 * h)
    phi: float = fransen_wrigge_phi(z)

    return abs(z * derivative - phi) / phi, 1e-5


def _check_tail_mass() -> tuple[float, float]:
    return abs(exponential_sum_tail(2).mass - 1.0 / sqrt(2.0)), 1e-10


def _check_fixed_closed_form() -> tuple[float, float]:
    expected: float = exp(-EULER_GAMMA) * (1.0 - log(1.5))

    return abs(fixed_A_density(1.0, 1.5) - expected), 1e-9


def _check_delay_table() -> tuple[float, float]:
    table = solve_delay_dde(1.0, 3.0)
    points: list[float] = [0.1 * k for k in range(1, 21)]
    error: float = max(
        abs(table.density(u) - fixed_A_density(1.0, u)) for u in points
    )

    return error, 1e-6


def _check_delay_mass() -> tuple[float, float]:
    return abs(solve_delay_dde(1.0, 12.0).mass() - 1.0), 1e-3


def _check_transform_identity() -> tuple[float, float]:
    spec = LawSpec.parse("gamma:1", "gamma:1")

    return abs(law_transform(spec, 1.0) - 1.0 / (1.0 + log(2.0))), 1e-12


def _simulated_ks(
    spec: LawSpec, law: AnalyticLaw, n_samples: int, upper: float = 2.0
) -> float:
    config = ChainConfig(n_steps=200, n_samples=n_samples, master_seed=0)
    empirical = sample_stationary(spec, config)
    reference = law.cdf_interpolant(upper)

    return empirical.ks_distance(reference, 0.0, upper)


def _check_small_simulation() -> tuple[float, float]:
    spec = LawSpec.parse("fixed:1", "det")

    return _simulated_ks(spec, FixedDeterministicLaw(1.0), 20_000), 0.02


def _check_nu_transform() -> tuple[float, float]:
    error: float = 0.0

    for s in (1.5, 2.0, 4.0):
        value = integrate_semi_infinite(
            lambda u, s=s: exp(-s * u) * volterra_nu(Z_SWITCH * u), 0.0, s
        ).value
        expected: float = 1.0 / (s * log(e ** (1.0 + EULER_GAMMA) * s))
        error = max(error, abs(value - expected))

    return error, 1e-5


def _check_gamma_mixture() -> tuple[float, float]:
    mixed = mix_over_exponent(gamma_amp_beta2_density_fixedA, 1.0).value

    return abs(mixed - gamma_amp_beta2_density(1.0)), 1e-3


def _check_deterministic_mixture() -> tuple[float, float]:
    mixed = mix_over_exponent(fixed_A_density, 0.5).value

    return abs(mixed - mixed_alpha1_density(0.5)), 1e-3


def _check_large_simulation() -> tuple[float, float]:
    spec = LawSpec.parse("fixed:1", "det")

    return _simulated_ks(spec, FixedDeterministicLaw(1.0), 1_000_000), 5e-3


def _check_mixed_simulation() -> tuple[float, float]:
    spec = LawSpec.parse("gamma:1", "det")

    return _simulated_ks(spec, MixedDeterministicLaw(), 1_000_000), 1e-2


QUICK_CHECKS: tuple[tuple[str, CheckFunction], ...] = (
    ("quadrature with endpoint singularity", _check_singular_endpoint),
    ("semi-infinite quadrature", _check_semi_infinite),
    ("sine integral", _check_sine_integral),
    ("reciprocal gamma coefficients", _check_reciprocal_gamma),
    ("nu series against quadrature", _check_nu_methods),
    ("phi as z nu'", _check_phi_derivative),
    ("two-exponential tail mass", _check_tail_mass),
    ("fixed A=1 density on (1, 2]", _check_fixed_closed_form),
    ("delay table on [0, 2]", _check_delay_table),
    ("delay table mass on [0, 12]", _check_delay_mass),
    ("transform of Gamma(1) amplitudes", _check_transform_identity),
    ("simulated fixed A=1 law", _check_small_simulation),
)
FULL_CHECKS: tuple[tuple[str, CheckFunction], ...] = QUICK_CHECKS + (
    ("Laplace transform of nu(cu)", _check_nu_transform),
    ("mixture of Gamma(2) amplitude densities", _check_gamma_mixture),
    ("mixture of deterministic densities", _check_deterministic_mixture),
    ("large fixed A=1 simulation", _check_large_simulation),
    ("large Gamma(1)-mixed simulation", _check_mixed_simulation),
)


def _run_check(name: str, check: CheckFunction) -> CheckOutcome:
    start: float = time.perf_counter()

    try:
        error, tolerance = check()
        detail: str = ""

    except (ShotNoiseError, ArithmeticError, ValueError) as err:
        logger.error(f"Check '{name}' raised: {err}")
        error, tolerance, detail = inf, 0.0, f"{type(err).__name__}: {err}"

    outcome = CheckOutcome(
        name, error, tolerance, time.perf_counter() - start, detail
    )
    logger.debug(f"{outcome}")

    return outcome


def run_selfcheck(level: str = "quick") -> SelfCheckReport:
    """Run the built-in checks.

    Parameters
    ----------
    level : str, default='quick'
        'quick' runs the kernel checks and a small simulation; 'full' adds
        transform identities, exponent mixtures and large simulations.

    Returns
    -------
    SelfCheckReport

    Raises
    ------
    ValueError
        If the level is unknown.

    """
    if level not in LEVELS:
        raise ValueError(f"Unknown level '{level}', expected {LEVELS}.")

    checks = QUICK_CHECKS if level == "quick" else FULL_CHECKS

    return SelfCheckReport(
        level, tuple(_run_check(name, check) for name, check in checks)
    )
