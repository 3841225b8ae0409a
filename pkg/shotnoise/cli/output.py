"""Plain-text sample files and comparison tables.

Both start with '#'-prefixed header lines describing the run. Values are
written with repr() so that reading a file back gives the same floats.
"""

from dataclasses import dataclass, fields
from pathlib import Path
from typing import Iterable, TextIO

import numpy as np

from shotnoise.exceptions import ConfigurationError

DELIMITER: str = ","
COLUMNS: dict[str, tuple[str, ...]] = {
    "density": ("u", "analytic_density", "mc_density", "mc_std_error"),
    "cdf": ("u", "analytic_cdf", "mc_cdf"),
    "both": (
        "u",
        "analytic_density",
        "analytic_cdf",
        "mc_density",
        "mc_cdf",
        "mc_std_error",
    ),
}


@dataclass(frozen=True)
class ComparisonRow:
    """Class defining analytic and Monte Carlo values at one abscissa.

    Attributes
    ----------
    u : float
        The abscissa.
    analytic_density, analytic_cdf : float, default=None
        The closed forms, None when not computed.
    mc_density, mc_cdf : float, default=None
        The histogram and empirical distribution function.
    mc_std_error : float, default=None
        Standard error of the histogram value.

    """

    u: float
    analytic_density: float | None = None
    analytic_cdf: float | None = None
    mc_density: float | None = None
    mc_cdf: float | None = None
    mc_std_error: float | None = None

    def __post_init__(self) -> None:
        analytic = (self.analytic_density, self.analytic_cdf)
        simulated = (self.mc_density, self.mc_cdf)

        if all(value is None for value in analytic) or all(
            value is None for value in simulated
        ):
            raise ConfigurationError(
                f"Row at u={self.u} needs an analytic and a Monte Carlo value."
            )

    @property
    def density_deviation(self) -> float | None:
        """Get |analytic - histogram| in standard errors.

        Returns
        -------
        float or None
            None when a term is missing, the error is 0 or the analytic
            density is infinite.

        """
        if (
            self.analytic_density is None
            or self.mc_density is None
            or not self.mc_std_error
            or not np.isfinite(self.analytic_density)
        ):
            return None

        return abs(self.analytic_density - self.mc_density) / self.mc_std_error

    def values(self, columns: Iterable[str]) -> list[str]:
        """Format the requested columns.

        Parameters
        ----------
        columns : iterable of str
            Field names.

        Returns
        -------
        list of str
            repr() of each value, 'nan' for missing ones.

        """
        known: set[str] = {item.name for item in fields(self)}
        formatted: list[str] = []

        for column in columns:
            if column not in known:
                raise ConfigurationError(f"Unknown column '{column}'.")

            value: float | None = getattr(self, column)
            formatted.append("nan" if value is None else repr(float(value)))

        return formatted


def write_header(stream: TextIO, lines: Iterable[str]) -> None:
    """Write '#'-prefixed header lines.

    Parameters
    ----------
    stream : TextIO
        The output.
    lines : iterable of str
        The header content.

    """
    for line in lines:
        stream.write(f"# {line}\n")


def write_samples(
    stream: TextIO, header: Iterable[str], samples: np.ndarray
) -> None:
    """Write a header then one sample per line.

    Parameters
    ----------
    stream : TextIO
        The output.
    header : iterable of str
        The header content.
    samples : numpy.ndarray
        The samples, in the order given.

    """
    write_header(stream, header)
    stream.writelines(f"{float(value)!r}\n" for value in samples)


def read_samples(path: Path | str) -> np.ndarray:
    """Read a sample file back.

    Parameters
    ----------
    path : pathlib.Path or str
        The file written by write_samples().

    Returns
    -------
    numpy.ndarray

    """
    return np.loadtxt(path, comments="#", ndmin=1)


def write_comparison(
    stream: TextIO,
    header: Iterable[str],
    rows: Iterable[ComparisonRow],
    quantity: str,
    summary: dict[str, float],
) -> None:
    """Write a comparison table.

    Parameters
    ----------
    stream : TextIO
        The output.
    header : iterable of str
        The header content.
    rows : iterable of ComparisonRow
        The table body.
    quantity : str
        'density', 'cdf' or 'both'; selects the columns.
    summary : dict of float
        Written as a trailing '# summary:' line.

    """
    columns: tuple[str, ...] = COLUMNS[quantity]

    write_header(stream, header)
    stream.write(DELIMITER.join(columns) + "\n")

    for row in rows:
        stream.write(DELIMITER.join(row.values(columns)) + "\n")

    stream.write(
        "# summary: "
        + " ".join(f"{key}={value:.6g}" for key, value in summary.items())
        + "\n"
    )
