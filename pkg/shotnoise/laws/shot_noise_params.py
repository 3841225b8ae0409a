"""Class defining the continuous-time shot-noise parameters."""

from dataclasses import dataclass

from shotnoise.exceptions import ConfigurationError

from .exponent import FixedExponent


@dataclass(frozen=True)
class ShotNoiseParams:
    """Class defining a Poisson shot-noise process.

    Attributes
    ----------
    lam : float
        The Poisson arrival rate Lambda.
    b : float
        The exponential decay rate B.

    """

    lam: float
    b: float

    def __post_init__(self) -> None:
        if not (self.lam > 0.0 and self.b > 0.0):
            raise ConfigurationError(
                f"Shot noise needs Lambda > 0 and B > 0, got {self}."
            )

    @property
    def exponent(self) -> float:
        """Get the exponent A = Lambda / B.

        Returns
        -------
        float

        """
        return self.lam / self.b

    def as_exponent_law(self) -> FixedExponent:
        """Get the fixed exponent law of the equivalent recurrence.

        Returns
        -------
        exponent.FixedExponent

        """
        return FixedExponent(self.exponent)
