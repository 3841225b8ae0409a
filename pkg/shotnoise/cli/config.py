"""Experiment settings read from a key=value file and the command line."""

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

import numpy as np

from shotnoise.analytic import EvaluationGrid
from shotnoise.exceptions import ConfigurationError, DomainError
from shotnoise.laws import LawSpec
from shotnoise.simulator import ChainConfig
from shotnoise.simulator.options import default_workers

from .figures import FigurePreset, figure_preset

QUANTITIES: tuple[str, ...] = ("density", "cdf", "both")


def read_config_file(path: Path | str) -> dict[str, str]:
    """Read a flat key=value file.

    Blank lines and lines starting with '#' are ignored.

    Parameters
    ----------
    path : pathlib.Path or str
        The file to read.

    Returns
    -------
    dict of str

    Raises
    ------
    ConfigurationError
        If a line has no '=' or the file cannot be read.

    """
    options: dict[str, str] = {}

    try:
        lines: list[str] = Path(path).read_text().splitlines()

    except OSError as err:
        raise ConfigurationError(
            f"Cannot read config '{path}': {err}"
        ) from err

    for number, line in enumerate(lines, start=1):
        text: str = line.strip()

        if not text or text.startswith("#"):
            continue

        key, sep, value = text.partition("=")

        if not sep:
            raise ConfigurationError(
                f"{path}:{number}: expected key=value, got '{text}'."
            )

        options[key.strip().replace("-", "_")] = value.strip()

    return options


@dataclass(frozen=True)
class GridSpec:
    """Class defining a uniform evaluation grid.

    Attributes
    ----------
    start : float
        The first abscissa.
    stop : float
        The last abscissa, stop > start.
    n_points : int
        Number of points, at least 2.

    """

    start: float
    stop: float
    n_points: int

    def __post_init__(self) -> None:
        if not self.stop > self.start:
            raise ConfigurationError(
                f"Grid needs min < max, got {self.start}:{self.stop}."
            )
        if self.n_points < 2:
            raise ConfigurationError(
                f"Grid needs at least 2 points, got {self.n_points}."
            )

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """Build a grid from 'min:max:n_points'.

        Parameters
        ----------
        text : str
            For example '0:6:301'.

        Returns
        -------
        GridSpec

        Raises
        ------
        ConfigurationError
            If the text is malformed.

        """
        parts: list[str] = text.split(":")

        if len(parts) != 3:
            raise ConfigurationError(
                f"Grid '{text}' must read 'min:max:n_points'."
            )

        try:
            return cls(float(parts[0]), float(parts[1]), int(parts[2]))

        except ValueError as err:
            raise ConfigurationError(f"Invalid grid '{text}'.") from err

    @property
    def step(self) -> float:
        """Get the spacing between points.

        Returns
        -------
        float

        """
        return (self.stop - self.start) / (self.n_points - 1)

    def evaluation_grid(self) -> EvaluationGrid:
        """Get the grid points tagged with their regime.

        Returns
        -------
        analytic.EvaluationGrid

        """
        try:
            return EvaluationGrid.linspace(
                self.start, self.stop, self.n_points
            )

        except DomainError as err:
            raise ConfigurationError(str(err)) from err

    def points(self) -> np.ndarray:
        """Get the grid points.

        Returns
        -------
        numpy.ndarray

        """
        return np.linspace(self.start, self.stop, self.n_points)

    def __str__(self) -> str:
        return f"{self.start:g}:{self.stop:g}:{self.n_points}"


@dataclass(frozen=True)
class ExperimentConfig:
    """Class defining one simulate or compare run.

    Attributes
    ----------
    spec : laws.LawSpec, default=LawSpec()
        The exponent and amplitude laws.
    grid : GridSpec, default=GridSpec(0, 6, 61)
        Where the laws are compared.
    chain : simulator.ChainConfig, default=ChainConfig()
        Monte Carlo sample count, steps, seed and workers.
    out : pathlib.Path, default=None
        Output file; standard output when None.
    figure : int, default=None
        Figure preset 1..9 the run reproduces.
    quantity : str, default='both'
        'density', 'cdf' or 'both'.
    tail_convention : str, default='corrected'
        Tail of the Gamma(1)-mixed deterministic distribution function.
    series_form : str, default='derived'
        Series of the Gamma(1)-mixed Laplace beta = 2 density.

    """

    spec: LawSpec = field(default_factory=LawSpec)
    grid: GridSpec = GridSpec(0.0, 6.0, 61)
    chain: ChainConfig = field(default_factory=ChainConfig)
    out: Path | None = None
    figure: int | None = None
    quantity: str = "both"
    tail_convention: str = "corrected"
    series_form: str = "derived"

    def __post_init__(self) -> None:
        if self.quantity not in QUANTITIES:
            raise ConfigurationError(
                f"Unknown quantity '{self.quantity}', expected {QUANTITIES}."
            )
        if self.figure is not None and not 1 <= self.figure <= 9:
            raise ConfigurationError(
                f"Figure must lie in 1..9, got {self.figure}."
            )

    @classmethod
    def from_options(cls, options: dict[str, Any]) -> "ExperimentConfig":
        """Build a configuration from flat options.

        Keys: spec, exponent, amplitude, grid, samples, steps, seed, workers,
        block_size, out, figure, quantity, tail_convention, series_form.
        A figure preset fills spec, grid and quantity; explicit keys still
        override it.

        Parameters
        ----------
        options : dict
            Values as strings or already typed; None means unset.

        Returns
        -------
        ExperimentConfig

        Raises
        ------
        ConfigurationError
            If a value is invalid.

        """
        values: dict[str, Any] = {
            key: value for key, value in options.items() if value is not None
        }
        config = cls()

        if "figure" in values:
            try:
                number = int(values["figure"])

            except ValueError as err:
                raise ConfigurationError(
                    f"Figure must be an integer, got '{values['figure']}'."
                ) from err

            preset: FigurePreset = figure_preset(number)
            config = cls(
                spec=preset.spec,
                grid=GridSpec.parse(preset.grid),
                figure=preset.figure,
                quantity=preset.quantity,
            )

        spec: LawSpec = config.spec

        if "spec" in values:
            spec = LawSpec.from_text(str(values["spec"]))
        if "exponent" in values or "amplitude" in values:
            spec = LawSpec.parse(
                values.get("exponent", str(spec.exponent)),
                values.get("amplitude", str(spec.amplitude)),
            )

        try:
            chain = ChainConfig(
                n_steps=int(values.get("steps", config.chain.n_steps)),
                n_samples=int(values.get("samples", config.chain.n_samples)),
                master_seed=int(values.get("seed", config.chain.master_seed)),
                n_workers=int(values.get("workers") or default_workers()),
                block_size=int(
                    values.get("block_size", config.chain.block_size)
                ),
            )

        except ValueError as err:
            raise ConfigurationError(f"Invalid integer option: {err}") from err

        grid: GridSpec = config.grid

        if "grid" in values:
            grid = (
                values["grid"]
                if isinstance(values["grid"], GridSpec)
                else GridSpec.parse(str(values["grid"]))
            )

        return replace(
            config,
            spec=spec,
            grid=grid,
            chain=chain,
            out=Path(values["out"]) if "out" in values else config.out,
            quantity=values.get("quantity", config.quantity),
            tail_convention=values.get(
                "tail_convention", config.tail_convention
            ),
            series_form=values.get("series_form", config.series_form),
        )

    def header(self) -> list[str]:
        """Describe the configuration as key: value lines.

        Returns
        -------
        list of str

        """
        lines: list[str] = [
            f"spec: {self.spec}",
            f"grid: {self.grid}",
            f"samples: {self.chain.n_samples}",
            f"steps: {self.chain.n_steps}",
            f"seed: {self.chain.master_seed}",
            f"block_size: {self.chain.block_size}",
            f"quantity: {self.quantity}",
            f"tail_convention: {self.tail_convention}",
            f"series_form: {self.series_form}",
        ]

        if self.figure is not None:
            lines.insert(0, f"figure: {self.figure}")
        if self.spec.amplitude.symmetric:
            lines.append("variable: |U|")

        return lines
