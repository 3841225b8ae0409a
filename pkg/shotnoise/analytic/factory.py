"""Pick the analytic law class of a parameterization."""

from shotnoise.exceptions import UnsupportedLawError
from shotnoise.laws import (
    DeterministicOne,
    FixedExponent,
    GammaAmplitude,
    GammaMixedExponent,
    LawSpec,
    SymmetricLaplace,
)

from .base import AnalyticLaw
from .fixed_deterministic import DEFAULT_STEP, FixedDeterministicLaw
from .gamma_amplitude import (
    GAMMA_SHAPES,
    FixedGammaAmplitudeLaw,
    MixedGammaAmplitudeLaw,
)
from .laplace_amplitude import LAPLACE_SHAPES, FixedLaplaceLaw, MixedLaplaceLaw
from .mixed_deterministic import MixedDeterministicLaw


def analytic_law(
    spec: LawSpec,
    step: float = DEFAULT_STEP,
    tail_convention: str = "corrected",
    series_form: str = "derived",
) -> AnalyticLaw:
    """Build the analytic law of a parameterization.

    Parameters
    ----------
    spec : laws.LawSpec
        The exponent and amplitude laws.
    step : float, default=1e-3
        Delay table step of fixed-exponent deterministic laws.
    tail_convention : str, default='corrected'
        Tail of the Gamma(1)-mixed deterministic distribution function.
    series_form : str, default='derived'
        Series of the Gamma(1)-mixed Laplace beta = 2 density.

    Returns
    -------
    AnalyticLaw

    Raises
    ------
    UnsupportedLawError
        If no closed form covers the combination.

    """
    exponent, amplitude = spec.exponent, spec.amplitude

    match exponent, amplitude:
        case FixedExponent(A=A), DeterministicOne():
            return FixedDeterministicLaw(A, step)
        case GammaMixedExponent(alpha=alpha), DeterministicOne():
            return MixedDeterministicLaw(alpha, tail_convention)
        case FixedExponent(A=A), GammaAmplitude(beta=beta) if (
            beta in GAMMA_SHAPES
        ):
            return FixedGammaAmplitudeLaw(A, beta)
        case GammaMixedExponent(alpha=1.0), GammaAmplitude(beta=beta) if (
            beta in GAMMA_SHAPES
        ):
            return MixedGammaAmplitudeLaw(beta)
        case FixedExponent(A=A), SymmetricLaplace(beta=beta) if (
            beta in LAPLACE_SHAPES
        ):
            return FixedLaplaceLaw(A, beta)
        case GammaMixedExponent(alpha=1.0), SymmetricLaplace(beta=beta) if (
            beta in LAPLACE_SHAPES
        ):
            return MixedLaplaceLaw(beta, series_form)

    raise UnsupportedLawError(
        f"No analytic law for the combination {spec}."
    )
