"""Classes defining the law of the pulse amplitudes Y_n."""

from dataclasses import dataclass

from shotnoise.exceptions import ConfigurationError


@dataclass(frozen=True)
class AmplitudeLaw:
    """Base class defining the law of the amplitudes.

    Textual forms: 'det', 'gamma:<beta>' and 'laplace:<beta>'.

    Methods
    -------
    parse(text)
        Build a law from its textual form.

    """

    @property
    def symmetric(self) -> bool:
        """Whether the law is symmetric around zero.

        Returns
        -------
        bool

        """
        return False

    @classmethod
    def parse(cls, text: str) -> "AmplitudeLaw":
        """Build an amplitude law from its textual form.

        Parameters
        ----------
        text : str
            One of 'det', 'gamma:<beta>' or 'laplace:<beta>'.

        Returns
        -------
        AmplitudeLaw

        Raises
        ------
        ConfigurationError
            If the text is not a valid amplitude law.

        """
        name, _, value = text.strip().lower().partition(":")

        match name:
            case "det" | "deterministic" if not value:
                return DeterministicOne()
            case "gamma":
                return GammaAmplitude(_parse_positive(text, value))
            case "laplace":
                return SymmetricLaplace(_parse_positive(text, value))
            case _:
                raise ConfigurationError(
                    f"Unknown amplitude law '{text}' "
                    "(expected det, gamma:<beta> or laplace:<beta>)."
                )


@dataclass(frozen=True)
class DeterministicOne(AmplitudeLaw):
    """Class defining amplitudes equal to 1."""

    def __str__(self) -> str:
        return "det"


@dataclass(frozen=True)
class GammaAmplitude(AmplitudeLaw):
    """Class defining Gamma(beta, 1) amplitudes.

    Attributes
    ----------
    beta : float
        The shape, beta > 0.

    """

    beta: float

    def __post_init__(self) -> None:
        if not self.beta > 0.0:
            raise ConfigurationError(
                f"Gamma amplitude needs beta > 0, got {self.beta}."
            )

    def __str__(self) -> str:
        return f"gamma:{self.beta:g}"


@dataclass(frozen=True)
class SymmetricLaplace(AmplitudeLaw):
    """Class defining symmetric amplitudes G1 - G2, G1 and G2 Gamma(beta).

    Their characteristic function is (1 + s^2)^(-beta).

    Attributes
    ----------
    beta : float
        The shape of each Gamma component, beta > 0.

    """

    beta: float

    def __post_init__(self) -> None:
        if not self.beta > 0.0:
            raise ConfigurationError(
                f"Laplace amplitude needs beta > 0, got {self.beta}."
            )

    @property
    def symmetric(self) -> bool:
        return True

    def __str__(self) -> str:
        return f"laplace:{self.beta:g}"


def _parse_positive(text: str, value: str) -> float:
    try:
        return float(value)

    except ValueError as err:
        raise ConfigurationError(
            f"Missing or invalid parameter in law '{text}'."
        ) from err
