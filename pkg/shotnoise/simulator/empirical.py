"""Class defining an empirical distribution and its validation statistics."""

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import stats

from shotnoise.exceptions import ConfigurationError

TRANSFORM_KINDS: tuple[str, ...] = ("laplace", "cosine")


@dataclass(frozen=True)
class HistogramDensity:
    """Class defining a binned density estimate.

    Attributes
    ----------
    edges : numpy.ndarray
        The bin edges.
    density : numpy.ndarray
        Sample fraction per bin divided by the bin width.
    std_error : numpy.ndarray
        Binomial standard error of each density value.

    """

    edges: np.ndarray
    density: np.ndarray
    std_error: np.ndarray

    @property
    def centers(self) -> np.ndarray:
        """Get the bin centers.

        Returns
        -------
        numpy.ndarray

        """
        return 0.5 * (self.edges[1:] + self.edges[:-1])

    def at(self, u: float) -> tuple[float, float]:
        """Get the density and its standard error in the bin holding u.

        Parameters
        ----------
        u : float
            The abscissa.

        Returns
        -------
        tuple of float
            (density, std_error), both NaN outside the histogram.

        """
        index: int = int(np.searchsorted(self.edges, u, side="right")) - 1

        if u == self.edges[-1]:
            index = len(self.density) - 1
        if not 0 <= index < len(self.density):
            return float("nan"), float("nan")

        return float(self.density[index]), float(self.std_error[index])


class EmpiricalDistribution:
    """Class defining the empirical law of i.i.d. samples.

    Attributes
    ----------
    samples : numpy.ndarray
        The samples, sorted ascending (read-only).

    Methods
    -------
    ecdf(x)
        Evaluate the empirical distribution function.
    histogram_density(bin_width, start, stop)
        Bin the samples into a density estimate.
    ks_distance(cdf, lower, upper)
        Kolmogorov-Smirnov distance to a distribution function.
    ks_two_sample(other)
        Kolmogorov-Smirnov distance to another sample.
    quantile(q)
        Evaluate empirical quantiles.
    abs()
        Get the empirical law of |U|.
    empirical_transform(s, kind)
        Estimate E[exp(-sU)] or E[cos(sU)] with its standard error.

    """

    def __init__(self, samples: np.ndarray) -> None:
        """Initialize the distribution.

        Parameters
        ----------
        samples : array_like
            At least one finite sample.

        Raises
        ------
        ConfigurationError
            If there is no sample or a sample is not finite.

        """
        values: np.ndarray = np.sort(np.asarray(samples, dtype=float))

        if values.size == 0:
            raise ConfigurationError("An empirical law needs samples.")
        if not np.isfinite(values).all():
            raise ConfigurationError("Samples must be finite.")

        values.setflags(write=False)
        self._samples: np.ndarray = values

    @property
    def samples(self) -> np.ndarray:
        """Get the sorted samples.

        Returns
        -------
        numpy.ndarray

        """
        return self._samples

    @property
    def size(self) -> int:
        """Get the number of samples.

        Returns
        -------
        int

        """
        return int(self._samples.size)

    def __len__(self) -> int:
        return self.size

    def ecdf(self, x: float | np.ndarray) -> float | np.ndarray:
        """Evaluate the fraction of samples <= x.

        Parameters
        ----------
        x : float or numpy.ndarray
            The abscissae.

        Returns
        -------
        float or numpy.ndarray

        """
        counts = np.searchsorted(self._samples, x, side="right")

        if np.ndim(counts) == 0:
            return float(counts) / self.size

        return counts / self.size

    def histogram_density(
        self,
        bin_width: float,
        start: float | None = None,
        stop: float | None = None,
    ) -> HistogramDensity:
        """Bin the samples into a density estimate.

        Densities are normalized by the total sample count, so samples
        outside [start, stop] lower the estimate accordingly.

        Parameters
        ----------
        bin_width : float
            Positive bin width.
        start : float, default=None
            Left edge, the smallest sample when None.
        stop : float, default=None
            Right limit, the largest sample when None.

        Returns
        -------
        HistogramDensity

        Raises
        ------
        ConfigurationError
            If the bin width is not positive.

        """
        if not bin_width > 0.0:
            raise ConfigurationError(
                f"Bin width must be positive, got {bin_width}."
            )

        low: float = float(self._samples[0]) if start is None else start
        high: float = float(self._samples[-1]) if stop is None else stop
        n_bins: int = max(1, int(np.ceil((high - low) / bin_width)))
        edges: np.ndarray = low + bin_width * np.arange(n_bins + 1)
        counts, _ = np.histogram(self._samples, edges)
        fractions: np.ndarray = counts / self.size

        return HistogramDensity(
            edges,
            fractions / bin_width,
            np.sqrt(fractions * (1.0 - fractions) / self.size) / bin_width,
        )

    def ks_distance(
        self,
        cdf: Callable[[float], float],
        lower: float | None = None,
        upper: float | None = None,
    ) -> float:
        """Get the supremum of |ECDF - F| over the sample points.

        Parameters
        ----------
        cdf : function(float) -> float
            The reference distribution function.
        lower, upper : float, default=None
            Restrict the supremum to samples in [lower, upper].

        Returns
        -------
        float

        """
        reference = np.vectorize(cdf, otypes=[float])

        if lower is None and upper is None:
            return float(stats.kstest(self._samples, reference).statistic)

        low: float = -np.inf if lower is None else lower
        high: float = np.inf if upper is None else upper
        first: int = int(np.searchsorted(self._samples, low, side="left"))
        last: int = int(np.searchsorted(self._samples, high, side="right"))

        if first == last:
            return 0.0

        points: np.ndarray = self._samples[first:last]
        values: np.ndarray = reference(points)
        above: np.ndarray = np.arange(first + 1, last + 1) / self.size
        below: np.ndarray = np.arange(first, last) / self.size

        return float(
            max(np.max(np.abs(above - values)), np.max(np.abs(below - values)))
        )

    def ks_two_sample(self, other: "EmpiricalDistribution") -> float:
        """Get the Kolmogorov-Smirnov distance to another sample.

        Parameters
        ----------
        other : EmpiricalDistribution
            The other sample.

        Returns
        -------
        float

        """
        return float(stats.ks_2samp(self._samples, other.samples).statistic)

    def quantile(self, q: float | np.ndarray) -> float | np.ndarray:
        """Evaluate empirical quantiles.

        Parameters
        ----------
        q : float or numpy.ndarray
            Probabilities in [0, 1].

        Returns
        -------
        float or numpy.ndarray

        """
        values = np.quantile(self._samples, q)

        return float(values) if np.ndim(values) == 0 else values

    def abs(self) -> "EmpiricalDistribution":
        """Get the empirical law of |U|.

        Returns
        -------
        EmpiricalDistribution

        """
        return EmpiricalDistribution(np.abs(self._samples))

    def empirical_transform(
        self, s: float, kind: str = "laplace"
    ) -> tuple[float, float]:
        """Estimate E[exp(-sU)] ('laplace') or E[cos(sU)] ('cosine').

        Parameters
        ----------
        s : float
            The transform variable.
        kind : str, default='laplace'
            Either 'laplace' or 'cosine'.

        Returns
        -------
        tuple of float
            (mean, std_error).

        Raises
        ------
        ConfigurationError
            If the kind is unknown.

        """
        match kind:
            case "laplace":
                values: np.ndarray = np.exp(-s * self._samples)
            case "cosine":
                values = np.cos(s * self._samples)
            case _:
                raise ConfigurationError(
                    f"Unknown transform kind '{kind}', "
                    f"expected one of {TRANSFORM_KINDS}."
                )

        if self.size == 1:
            return float(values[0]), 0.0

        return (
            float(values.mean()),
            float(values.std(ddof=1) / np.sqrt(self.size)),
        )
