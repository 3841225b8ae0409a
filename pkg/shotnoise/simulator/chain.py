"""Random variates, the discrete recurrence and the shot-noise path.

Every kernel draws from a caller-owned numpy Generator, so a block of
trajectories is fully determined by the generator it is given.
"""

from logging import INFO, Logger, getLogger

import numpy as np

from shotnoise.exceptions import ConfigurationError
from shotnoise.laws import (
    AmplitudeLaw,
    DeterministicOne,
    ExponentLaw,
    FixedExponent,
    GammaAmplitude,
    GammaMixedExponent,
    LawSpec,
    ShotNoiseParams,
    SymmetricLaplace,
)

logger: Logger = getLogger("shotnoise.simulator.chain")
logger.setLevel(INFO)


def sample_amplitudes(
    law: AmplitudeLaw, rng: np.random.Generator, size: int
) -> np.ndarray:
    """Draw amplitudes.

    Parameters
    ----------
    law : laws.AmplitudeLaw
        1 for deterministic amplitudes, Gamma(beta, 1) variates, or G1 - G2
        with independent Gamma(beta, 1) variates for Laplace amplitudes.
    rng : numpy.random.Generator
        The random stream.
    size : int
        Number of variates.

    Returns
    -------
    numpy.ndarray

    """
    match law:
        case DeterministicOne():
            return np.ones(size)
        case GammaAmplitude(beta=beta):
            return rng.gamma(beta, 1.0, size)
        case SymmetricLaplace(beta=beta):
            return rng.gamma(beta, 1.0, size) - rng.gamma(beta, 1.0, size)
        case _:
            raise ConfigurationError(f"Cannot sample amplitude law {law}.")


def sample_amplitude(law: AmplitudeLaw, rng: np.random.Generator) -> float:
    """Draw one amplitude.

    Parameters
    ----------
    law : laws.AmplitudeLaw
        The amplitude law.
    rng : numpy.random.Generator
        The random stream.

    Returns
    -------
    float

    """
    return float(sample_amplitudes(law, rng, 1)[0])


def sample_exponents(
    law: ExponentLaw, rng: np.random.Generator, size: int
) -> np.ndarray:
    """Draw exponents, one per trajectory.

    Gamma variates that underflow to 0 are drawn again.

    Parameters
    ----------
    law : laws.ExponentLaw
        A fixed exponent or Gamma(alpha, 1).
    rng : numpy.random.Generator
        The random stream.
    size : int
        Number of variates.

    Returns
    -------
    numpy.ndarray
        Positive exponents.

    """
    match law:
        case FixedExponent(A=A):
            return np.full(size, A)
        case GammaMixedExponent(alpha=alpha):
            exponents: np.ndarray = rng.gamma(alpha, 1.0, size)
            zeros: np.ndarray = exponents <= 0.0

            while zeros.any():
                logger.debug(f"Redrawing {zeros.sum()} null exponents.")
                exponents[zeros] = rng.gamma(alpha, 1.0, int(zeros.sum()))
                zeros = exponents <= 0.0

            return exponents
        case _:
            raise ConfigurationError(f"Cannot sample exponent law {law}.")


def sample_exponent(law: ExponentLaw, rng: np.random.Generator) -> float:
    """Draw one exponent.

    Parameters
    ----------
    law : laws.ExponentLaw
        The exponent law.
    rng : numpy.random.Generator
        The random stream.

    Returns
    -------
    float

    """
    return float(sample_exponents(law, rng, 1)[0])


def iterate_chains(
    spec: LawSpec, n_steps: int, rng: np.random.Generator, size: int
) -> np.ndarray:
    """Run independent trajectories of U_n = X_n (Y_n + U_(n-1)), U_0 = 0.

    Each trajectory draws its exponent A once and keeps it; the
    multipliers are X_n = V_n^(1/A) with V_n uniform on (0, 1].

    Parameters
    ----------
    spec : laws.LawSpec
        The exponent and amplitude laws.
    n_steps : int
        Iterations per trajectory, at least 1.
    rng : numpy.random.Generator
        The random stream.
    size : int
        Number of trajectories.

    Returns
    -------
    numpy.ndarray
        U_(n_steps) of every trajectory.

    Raises
    ------
    ConfigurationError
        If n_steps < 1.

    """
    if n_steps < 1:
        raise ConfigurationError(f"n_steps must be >= 1, got {n_steps}.")

    inverse_exponents: np.ndarray = 1.0 / sample_exponents(
        spec.exponent, rng, size
    )
    u: np.ndarray = np.zeros(size)

    for _ in range(n_steps):
        multipliers = np.power(1.0 - rng.random(size), inverse_exponents)
        u = multipliers * (sample_amplitudes(spec.amplitude, rng, size) + u)

    return u


def iterate_chain(
    spec: LawSpec, n_steps: int, rng: np.random.Generator
) -> float:
    """Run one trajectory and return U_(n_steps).

    Parameters
    ----------
    spec : laws.LawSpec
        The exponent and amplitude laws.
    n_steps : int
        Iterations, at least 1.
    rng : numpy.random.Generator
        The random stream.

    Returns
    -------
    float

    """
    return float(iterate_chains(spec, n_steps, rng, 1)[0])


def simulate_shot_noise_paths(
    params: ShotNoiseParams,
    amplitude: AmplitudeLaw,
    t_end: float,
    rng: np.random.Generator,
    size: int,
) -> np.ndarray:
    """Evaluate Z(t_end) = sum_(T_i <= t_end) Y_i exp(-B (t_end - T_i)).

    Arrivals form a Poisson process of rate Lambda on [0, t_end]: a Poisson
    count per path, then uniform arrival times.

    Parameters
    ----------
    params : laws.ShotNoiseParams
        The rate Lambda and the decay B.
    amplitude : laws.AmplitudeLaw
        The law of the marks Y_i.
    t_end : float
        The observation time; t_end >= 30 / B is close to stationary.
    rng : numpy.random.Generator
        The random stream.
    size : int
        Number of independent paths.

    Returns
    -------
    numpy.ndarray

    """
    if not t_end > 0.0:
        raise ConfigurationError(f"t_end must be positive, got {t_end}.")

    counts: np.ndarray = rng.poisson(params.lam * t_end, size)
    total: int = int(counts.sum())
    times: np.ndarray = rng.uniform(0.0, t_end, total)
    marks: np.ndarray = sample_amplitudes(amplitude, rng, total)
    owners: np.ndarray = np.repeat(np.arange(size), counts)

    return np.bincount(
        owners,
        weights=marks * np.exp(-params.b * (t_end - times)),
        minlength=size,
    )


def simulate_shot_noise(
    params: ShotNoiseParams,
    amplitude: AmplitudeLaw,
    t_end: float,
    rng: np.random.Generator,
) -> float:
    """Evaluate one shot-noise path at t_end.

    Parameters
    ----------
    params : laws.ShotNoiseParams
        The rate Lambda and the decay B.
    amplitude : laws.AmplitudeLaw
        The law of the marks.
    t_end : float
        The observation time.
    rng : numpy.random.Generator
        The random stream.

    Returns
    -------
    float

    """
    paths = simulate_shot_noise_paths(params, amplitude, t_end, rng, 1)

    return float(paths[0])
