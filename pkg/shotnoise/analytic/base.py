"""Generic base class for analytic stationary laws."""

from dataclasses import dataclass, field
from functools import wraps
from math import log
from typing import Callable, Iterable, Iterator

import numpy as np

from shotnoise.exceptions import DomainError, UnsupportedLawError
from shotnoise.laws import LawSpec

# Densities with a 1/u factor switch to their leading order below this.
SMALL_U: float = 1e-8

UNIT_INTERVAL: str = "unit-interval"
SECOND_INTERVAL: str = "second-interval"
TAIL: str = "tail"


def regime_of(u: float) -> str:
    """Get the piecewise regime of an abscissa.

    Parameters
    ----------
    u : float
        The abscissa. Symmetric laws are tagged by |u|.

    Returns
    -------
    str
        'unit-interval' on [0, 1], 'second-interval' on (1, 2], 'tail'
        beyond.

    """
    magnitude: float = abs(u)

    if magnitude <= 1.0:
        return UNIT_INTERVAL
    if magnitude <= 2.0:
        return SECOND_INTERVAL

    return TAIL


@dataclass(frozen=True)
class EvaluationGrid:
    """Class defining ordered abscissae tagged with their regime.

    Attributes
    ----------
    points : tuple of float
        Strictly increasing abscissae.
    regimes : tuple of str
        The regime of each point.

    """

    points: tuple[float, ...]
    regimes: tuple[str, ...] = field(init=False)

    def __post_init__(self) -> None:
        if len(self.points) < 2:
            raise DomainError("A grid needs at least two points.")
        if any(b <= a for a, b in zip(self.points, self.points[1:])):
            raise DomainError("Grid points must be strictly increasing.")

        object.__setattr__(
            self, "regimes", tuple(regime_of(u) for u in self.points)
        )

    @classmethod
    def linspace(
        cls, start: float, stop: float, n_points: int
    ) -> "EvaluationGrid":
        """Build a uniform grid.

        Parameters
        ----------
        start, stop : float
            The bounds, start < stop.
        n_points : int
            Number of points, at least 2.

        Returns
        -------
        EvaluationGrid

        """
        points = np.linspace(start, stop, n_points)

        return cls(tuple(float(u) for u in points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[float]:
        return iter(self.points)


@dataclass(frozen=True)
class DensityEvaluation:
    """Class defining a density value and how it was obtained.

    Attributes
    ----------
    value : float
        The density.
    asymptotic : bool
        Whether the leading-order small-u form was used.

    """

    value: float
    asymptotic: bool = False

    def __float__(self) -> float:
        return self.value


def _positive_support(
    func: Callable[..., float]
) -> Callable[..., float]:
    """Return 0 for negative abscissae.

    To be used as a decorator on densities and distribution functions of
    non-negative laws.

    Parameters
    ----------
    func : Callable
        The method to decorate.

    Returns
    -------
    Callable
        The wrapper function.

    """

    @wraps(func)
    def wrapper(self: "AnalyticLaw", u: float) -> float:
        if u < 0.0:
            return 0.0

        return func(self, u)

    return wrapper


def _even(func: Callable[..., float]) -> Callable[..., float]:
    """Evaluate at |u|.

    To be used as a decorator on densities of symmetric laws.

    Parameters
    ----------
    func : Callable
        The method to decorate.

    Returns
    -------
    Callable
        The wrapper function.

    """

    @wraps(func)
    def wrapper(self: "AnalyticLaw", u: float) -> float:
        return func(self, abs(u))

    return wrapper


class AnalyticLaw:
    """Base class defining an analytic stationary law.

    Subclasses implement density() and, where a closed form exists,
    cdf(). Symmetric laws report the distribution function of |U|.

    Attributes
    ----------
    small_u_weight : float, default=None
        kappa in the leading order kappa / (u |ln u|^(1 + p)) of densities
        that blow up at 0. None when the density has no 1/u factor.
    small_u_power : float, default=1.0
        p in the leading order above.

    Methods
    -------
    density(u)
        Evaluate the density.
    cdf(u)
        Evaluate the distribution function.
    evaluate_density(u)
        Evaluate the density with the small-u guard.
    density_on(points)
        Evaluate the density on several abscissae.
    cdf_on(points)
        Evaluate the distribution function on several abscissae.

    """

    small_u_weight: float | None = None
    small_u_power: float = 1.0
    has_density: bool = True
    has_cdf: bool = True

    @property
    def spec(self) -> LawSpec:
        """Get the parameterization."""
        ...  # Implemented in concrete law classes.

    @property
    def symmetric(self) -> bool:
        """Whether the law is symmetric, so that cdf() refers to |U|.

        Returns
        -------
        bool

        """
        return self.spec.amplitude.symmetric

    def _unsupported(self, what: str) -> UnsupportedLawError:
        return UnsupportedLawError(
            f"No analytic {what} for the combination {self.spec}."
        )

    def density(self, u: float) -> float:
        """Evaluate the density at u.

        Raises
        ------
        UnsupportedLawError
            If the law has no analytic density.

        """
        raise self._unsupported("density")

    def cdf(self, u: float) -> float:
        """Evaluate the distribution function at u.

        Raises
        ------
        UnsupportedLawError
            If the law has no analytic distribution function.

        """
        raise self._unsupported("distribution function")

    def evaluate_density(self, u: float) -> DensityEvaluation:
        """Evaluate the density, guarding the 1/u blow-up at the origin.

        Parameters
        ----------
        u : float
            The abscissa.

        Returns
        -------
        DensityEvaluation
            asymptotic=True when |u| < 1e-8 and the density blows up there.

        """
        magnitude: float = abs(u)

        if self.small_u_weight is not None and magnitude < SMALL_U:
            if magnitude == 0.0:
                return DensityEvaluation(float("inf"), True)
            if u < 0.0 and not self.symmetric:
                return DensityEvaluation(0.0)

            power: float = 1.0 + self.small_u_power
            value: float = self.small_u_weight / (
                magnitude * abs(log(magnitude)) ** power
            )

            return DensityEvaluation(value, True)

        return DensityEvaluation(self.density(u))

    def density_on(self, points: Iterable[float]) -> np.ndarray:
        """Evaluate the guarded density on several abscissae.

        Parameters
        ----------
        points : iterable of float
            The abscissae.

        Returns
        -------
        numpy.ndarray

        """
        return np.array([self.evaluate_density(u).value for u in points])

    def cdf_on(self, points: Iterable[float]) -> np.ndarray:
        """Evaluate the distribution function on several abscissae.

        Parameters
        ----------
        points : iterable of float
            The abscissae.

        Returns
        -------
        numpy.ndarray

        """
        return np.array([self.cdf(u) for u in points])

    def cdf_interpolant(
        self,
        upper: float,
        n_log: int = 60,
        n_linear: int = 200,
        floor: float = 1e-300,
    ) -> Callable[[np.ndarray], np.ndarray]:
        """Tabulate the distribution function for many evaluations.

        Below 0.01 the table is uniform in ln(u), which follows the
        1 / ln(1/u) behavior of the mixed laws near 0; above it is
        uniform in u up to upper.

        Parameters
        ----------
        upper : float
            End of the table, upper > 0.01.
        n_log, n_linear : int, default=60, 200
            Number of nodes of each part.
        floor : float, default=1e-300
            First node.

        Returns
        -------
        function(numpy.ndarray) -> numpy.ndarray
            Linear interpolation; 0 for u <= 0, F(upper) beyond upper.

        """
        switch: float = 1e-2

        if not upper > switch:
            raise DomainError(f"Table end must exceed {switch}, got {upper}.")

        small: np.ndarray = np.geomspace(floor, switch, n_log)
        large: np.ndarray = np.linspace(switch, upper, n_linear)
        small_values: np.ndarray = self.cdf_on(small)
        large_values: np.ndarray = self.cdf_on(large)

        def interpolant(u: np.ndarray) -> np.ndarray:
            x: np.ndarray = np.asarray(u, dtype=float)
            log_x: np.ndarray = np.log(np.maximum(x, floor))
            near: np.ndarray = np.interp(
                log_x, np.log(small), small_values, left=0.0
            )
            far: np.ndarray = np.interp(x, large, large_values)

            return np.where(x <= 0.0, 0.0, np.where(x < switch, near, far))

        return interpolant
