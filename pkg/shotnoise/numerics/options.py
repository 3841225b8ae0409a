"""Numerical settings: quadrature tolerances and series truncation."""

from dataclasses import dataclass
from typing import Any

from shotnoise.exceptions import ConfigurationError


@dataclass(frozen=True)
class QuadratureConfig:
    """Class to define and group the quadrature tolerances.

    Attributes
    ----------
    abs_tol : float, default=1e-9
        Absolute tolerance.
    rel_tol : float, default=1e-8
        Relative tolerance.
    max_subdivisions : int, default=2000
        Maximum number of subintervals (finite integrals) or panels
        (semi-infinite integrals).
    oscillatory_max_half_periods : int, default=100000
        Maximum number of half-periods summed by the oscillatory integrator.
    debug : bool, default=False
        Whether to log every integral at DEBUG level.

    """

    abs_tol: float = 1e-9
    rel_tol: float = 1e-8
    max_subdivisions: int = 2000
    oscillatory_max_half_periods: int = 100_000
    debug: bool = False

    def __post_init__(self) -> None:
        """Validate the tolerances.

        Raises
        ------
        ConfigurationError
            If a tolerance is not positive or a budget is lower than one.

        """
        if not (self.abs_tol > 0.0 and self.rel_tol > 0.0):
            raise ConfigurationError(
                "Quadrature tolerances must be positive, got "
                f"abs_tol={self.abs_tol}, rel_tol={self.rel_tol}."
            )
        if self.max_subdivisions < 1:
            raise ConfigurationError("max_subdivisions must be >= 1.")
        if self.oscillatory_max_half_periods < 1:
            raise ConfigurationError(
                "oscillatory_max_half_periods must be >= 1."
            )

    @classmethod
    def from_options(cls, options: dict[str, Any]) -> "QuadratureConfig":
        """Build a configuration from an options dict.

        Parameters
        ----------
        options : dict
            The options as a dict. Missing keys take their default value.

        Returns
        -------
        QuadratureConfig

        """
        return cls(
            abs_tol=float(options.get("abs_tol", 1e-9)),
            rel_tol=float(options.get("rel_tol", 1e-8)),
            max_subdivisions=int(options.get("max_subdivisions", 2000)),
            oscillatory_max_half_periods=int(
                options.get("oscillatory_max_half_periods", 100_000)
            ),
            debug=bool(options.get("debug", False)),
        )

    def tolerance_for(self, value: float) -> float:
        """Get the error level a result of this magnitude must reach.

        Parameters
        ----------
        value : float
            The integral value.

        Returns
        -------
        float
            max(abs_tol, rel_tol * |value|).

        """
        return max(self.abs_tol, self.rel_tol * abs(value))


# Index integrals of the Volterra family can be tiny (e^{-2k} factors), so
# they are controlled by the relative tolerance alone.
INDEX_INTEGRAL_CONFIG: QuadratureConfig = QuadratureConfig(
    abs_tol=1e-300, rel_tol=1e-11, max_subdivisions=400
)


@dataclass(frozen=True)
class SeriesTruncation:
    """Class to define when an infinite series is cut.

    Attributes
    ----------
    max_terms : int, default=200
        Maximum number of terms summed.
    term_tol : float, default=1e-12
        A term whose magnitude falls under term_tol times the partial sum
        ends the summation.

    """

    max_terms: int = 200
    term_tol: float = 1e-12

    def __post_init__(self) -> None:
        """Validate the truncation rule.

        Raises
        ------
        ConfigurationError
            If max_terms < 1 or term_tol <= 0.

        """
        if self.max_terms < 1:
            raise ConfigurationError("max_terms must be >= 1.")
        if not self.term_tol > 0.0:
            raise ConfigurationError("term_tol must be positive.")
