"""Transform of the stationary law and its small-s expansion."""

from math import exp, factorial, log1p

from shotnoise.exceptions import DomainError, UnsupportedLawError
from shotnoise.laws import (
    AmplitudeLaw,
    ExponentLaw,
    FixedExponent,
    GammaMixedExponent,
    LawSpec,
)

from .amplitude import exponent_integral

MAX_EXPANSION_ORDER: int = 20


def stationary_transform(
    exp_law: ExponentLaw, amp_law: AmplitudeLaw, s: float
) -> float:
    """Compute the transform g(s) of the stationary law.

    Fixed A gives exp(-A I(s)) and a Gamma(alpha) exponent, the mixture of
    these over A, gives (1 + I(s))^(-alpha). For symmetric amplitudes g is
    the characteristic function E[cos(sU)].

    Parameters
    ----------
    exp_law : laws.ExponentLaw
        The exponent law.
    amp_law : laws.AmplitudeLaw
        The amplitude law.
    s : float
        Non-negative transform variable.

    Returns
    -------
    float

    """
    integral: float = exponent_integral(amp_law, s)

    match exp_law:
        case FixedExponent(A=A):
            return exp(-A * integral)
        case GammaMixedExponent(alpha=alpha):
            return exp(-alpha * log1p(integral))
        case _:
            raise UnsupportedLawError(
                f"No transform for exponent '{exp_law}'."
            )


def law_transform(spec: LawSpec, s: float) -> float:
    """Compute the stationary transform of a law specification.

    Parameters
    ----------
    spec : laws.LawSpec
        The parameterization.
    s : float
        Non-negative transform variable.

    Returns
    -------
    float

    """
    return stationary_transform(spec.exponent, spec.amplitude, s)


def small_s_expansion_coeffs(N: int) -> list[float]:
    """Get c_1..c_N with Ein(s) = sum_k c_k s^k, c_k = (-1)^(k+1)/(k k!).

    Parameters
    ----------
    N : int
        The order, 2 <= N <= 20.

    Returns
    -------
    list of float

    Raises
    ------
    DomainError
        If N is out of range.

    """
    if not 2 <= N <= MAX_EXPANSION_ORDER:
        raise DomainError(
            f"Expansion order must lie in [2, {MAX_EXPANSION_ORDER}], got {N}."
        )

    return [(-1) ** (k + 1) / (k * factorial(k)) for k in range(1, N + 1)]
