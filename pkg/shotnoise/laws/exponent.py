"""Classes defining the law of the exponent A = Lambda / B."""

from dataclasses import dataclass

from shotnoise.exceptions import ConfigurationError

from .amplitude import _parse_positive


@dataclass(frozen=True)
class ExponentLaw:
    """Base class defining the law of the exponent.

    Textual forms: 'fixed:<A>' and 'gamma:<alpha>'.

    Methods
    -------
    parse(text)
        Build a law from its textual form.

    """

    @classmethod
    def parse(cls, text: str) -> "ExponentLaw":
        """Build an exponent law from its textual form.

        Parameters
        ----------
        text : str
            Either 'fixed:<A>' or 'gamma:<alpha>'.

        Returns
        -------
        ExponentLaw

        Raises
        ------
        ConfigurationError
            If the text is not a valid exponent law.

        """
        name, _, value = text.strip().lower().partition(":")

        match name:
            case "fixed":
                return FixedExponent(_parse_positive(text, value))
            case "gamma":
                return GammaMixedExponent(_parse_positive(text, value))
            case _:
                raise ConfigurationError(
                    f"Unknown exponent law '{text}' "
                    "(expected fixed:<A> or gamma:<alpha>)."
                )


@dataclass(frozen=True)
class FixedExponent(ExponentLaw):
    """Class defining a deterministic exponent.

    Attributes
    ----------
    A : float
        The exponent, A > 0.

    """

    A: float

    def __post_init__(self) -> None:
        if not self.A > 0.0:
            raise ConfigurationError(f"Exponent needs A > 0, got {self.A}.")

    def __str__(self) -> str:
        return f"fixed:{self.A:g}"


@dataclass(frozen=True)
class GammaMixedExponent(ExponentLaw):
    """Class defining an exponent drawn from Gamma(alpha, 1).

    The exponent is drawn once per trajectory and shared by all its steps.

    Attributes
    ----------
    alpha : float
        The shape, alpha > 0.

    """

    alpha: float

    def __post_init__(self) -> None:
        if not self.alpha > 0.0:
            raise ConfigurationError(
                f"Mixed exponent needs alpha > 0, got {self.alpha}."
            )

    def __str__(self) -> str:
        return f"gamma:{self.alpha:g}"
