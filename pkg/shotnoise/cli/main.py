"""Command-line entry point: simulate, compare and selfcheck."""

import logging
import sys
from argparse import ArgumentParser, Namespace
from contextlib import contextmanager
from logging import INFO, Logger, getLogger
from pathlib import Path
from typing import Any, Iterator, Sequence, TextIO

from shotnoise.analytic import AnalyticLaw, analytic_law
from shotnoise.exceptions import (
    ConfigurationError,
    DomainError,
    ShotNoiseError,
    UnsupportedLawError,
)
from shotnoise.simulator import EmpiricalDistribution, Sampler

from .config import ExperimentConfig, read_config_file
from .output import ComparisonRow, write_comparison, write_samples
from .selfcheck import LEVELS, run_selfcheck

logger: Logger = getLogger("shotnoise.cli")
logger.setLevel(INFO)

EXIT_OK: int = 0
EXIT_FAILURE: int = 1
EXIT_USAGE: int = 2

# Command-line destinations forwarded to ExperimentConfig.from_options().
OPTION_KEYS: tuple[str, ...] = (
    "spec",
    "exponent",
    "amplitude",
    "grid",
    "samples",
    "steps",
    "seed",
    "workers",
    "block_size",
    "out",
    "figure",
    "quantity",
    "tail_convention",
    "series_form",
)


def build_parser() -> ArgumentParser:
    """Build the argument parser with its three subcommands.

    Returns
    -------
    argparse.ArgumentParser

    """
    parser = ArgumentParser(
        prog="shotnoise",
        description="Stationary law of U_n = X_n (Y_n + U_{n-1}).",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log at DEBUG level"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    common = ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file, flags override it")
    common.add_argument("--spec", help="law as '<exponent>+<amplitude>'")
    common.add_argument("--exponent", help="'fixed:<A>' or 'gamma:<alpha>'")
    common.add_argument(
        "--amplitude", help="'det', 'gamma:<beta>' or 'laplace:<beta>'"
    )
    common.add_argument("--samples", type=int, help="number of trajectories")
    common.add_argument("--steps", type=int, help="iterations per trajectory")
    common.add_argument("--seed", type=int, help="master seed")
    common.add_argument(
        "--workers", type=int, help="worker threads (SHOTNOISE_WORKERS)"
    )
    common.add_argument("--block-size", dest="block_size", type=int)
    common.add_argument("--out", help="output file, standard output if unset")

    commands.add_parser(
        "simulate", parents=[common], help="write stationary samples"
    )

    compare = commands.add_parser(
        "compare",
        parents=[common],
        help="tabulate closed forms against a simulation",
    )
    compare.add_argument("--figure", type=int, help="preset 1..9")
    compare.add_argument("--grid", help="'min:max:n_points'")
    compare.add_argument("--quantity", choices=("density", "cdf", "both"))
    compare.add_argument(
        "--tail-convention",
        dest="tail_convention",
        choices=("corrected", "printed"),
    )
    compare.add_argument(
        "--series-form", dest="series_form", choices=("derived", "printed")
    )

    selfcheck = commands.add_parser("selfcheck", help="run built-in checks")
    selfcheck.add_argument("--level", choices=LEVELS, default="quick")

    return parser


def config_from_args(args: Namespace) -> ExperimentConfig:
    """Merge the config file and the flags.

    Parameters
    ----------
    args : argparse.Namespace
        The parsed command line.

    Returns
    -------
    ExperimentConfig

    """
    options: dict[str, Any] = (
        read_config_file(args.config) if args.config else {}
    )

    for key in OPTION_KEYS:
        value: Any = getattr(args, key, None)

        if value is not None:
            options[key] = value

    return ExperimentConfig.from_options(options)


@contextmanager
def _output(path: Path | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return

    try:
        with path.open("w", encoding="utf-8") as stream:
            yield stream

    except OSError as err:
        raise ConfigurationError(f"Cannot write '{path}': {err}") from err


def _sample(cfg: ExperimentConfig) -> EmpiricalDistribution:
    return Sampler.from_config(cfg.chain).sample_stationary(cfg.spec)


def run_simulate(cfg: ExperimentConfig) -> int:
    """Simulate the stationary law and write the samples.

    Parameters
    ----------
    cfg : ExperimentConfig
        The run configuration.

    Returns
    -------
    int
        The exit code.

    """
    empirical: EmpiricalDistribution = _sample(cfg)
    header: list[str] = ["command: simulate", *cfg.header()]

    with _output(cfg.out) as stream:
        write_samples(stream, header, empirical.samples)

    logger.info(f"Wrote {empirical.size} samples of {cfg.spec}.")

    return EXIT_OK


def _analytic_density(law: AnalyticLaw, u: float) -> float:
    # |U| has density 2 f(u) for a symmetric law.
    value: float = law.evaluate_density(u).value

    return 2.0 * value if law.symmetric else value


def compare_rows(
    cfg: ExperimentConfig,
    law: AnalyticLaw,
    empirical: EmpiricalDistribution,
) -> list[ComparisonRow]:
    """Evaluate the closed forms and the simulation on the grid.

    Histogram bins are centered on the grid points and have the grid
    spacing as width.

    Parameters
    ----------
    cfg : ExperimentConfig
        The run configuration.
    law : analytic.AnalyticLaw
        The closed forms.
    empirical : simulator.EmpiricalDistribution
        The samples, of |U| for a symmetric law.

    Returns
    -------
    list of ComparisonRow

    """
    with_density: bool = cfg.quantity in ("density", "both")
    with_cdf: bool = cfg.quantity in ("cdf", "both")
    half: float = 0.5 * cfg.grid.step
    histogram = empirical.histogram_density(
        cfg.grid.step, cfg.grid.start - half, cfg.grid.stop + half
    )
    rows: list[ComparisonRow] = []

    for u in cfg.grid.points():
        point: float = float(u)
        density, std_error = histogram.at(point)

        rows.append(
            ComparisonRow(
                point,
                analytic_density=(
                    _analytic_density(law, point) if with_density else None
                ),
                analytic_cdf=law.cdf(point) if with_cdf else None,
                mc_density=density if with_density else None,
                mc_cdf=float(empirical.ecdf(point)) if with_cdf else None,
                mc_std_error=std_error if with_density else None,
            )
        )

    return rows


def comparison_summary(rows: Sequence[ComparisonRow]) -> dict[str, float]:
    """Summarize a comparison table.

    Parameters
    ----------
    rows : sequence of ComparisonRow
        The table body.

    Returns
    -------
    dict of float
        'ks_distance', the largest |ECDF - F| over the grid, and
        'max_density_deviation', the largest |analytic - histogram| in
        standard errors; each only when its columns are present.

    """
    summary: dict[str, float] = {}
    gaps: list[float] = [
        abs(row.analytic_cdf - row.mc_cdf)
        for row in rows
        if row.analytic_cdf is not None and row.mc_cdf is not None
    ]
    deviations: list[float] = [
        deviation
        for deviation in (row.density_deviation for row in rows)
        if deviation is not None
    ]

    if gaps:
        summary["ks_distance"] = max(gaps)
    if deviations:
        summary["max_density_deviation"] = max(deviations)

    return summary


def run_compare(cfg: ExperimentConfig) -> int:
    """Tabulate the closed forms against a simulation.

    Parameters
    ----------
    cfg : ExperimentConfig
        The run configuration.

    Returns
    -------
    int
        The exit code.

    Raises
    ------
    UnsupportedLawError
        If the law has no closed form for the requested quantity.

    """
    law: AnalyticLaw = analytic_law(
        cfg.spec,
        tail_convention=cfg.tail_convention,
        series_form=cfg.series_form,
    )

    if cfg.quantity in ("density", "both") and not law.has_density:
        raise UnsupportedLawError(f"No analytic density for {cfg.spec}.")
    if cfg.quantity in ("cdf", "both") and not law.has_cdf:
        raise UnsupportedLawError(
            f"No analytic distribution function for {cfg.spec}."
        )

    empirical: EmpiricalDistribution = _sample(cfg)

    if law.symmetric:
        empirical = empirical.abs()

    rows: list[ComparisonRow] = compare_rows(cfg, law, empirical)
    summary: dict[str, float] = comparison_summary(rows)

    with _output(cfg.out) as stream:
        write_comparison(
            stream,
            ["command: compare", *cfg.header()],
            rows,
            cfg.quantity,
            summary,
        )

    logger.info(f"Compared {cfg.spec}: {summary}")

    return EXIT_OK


def _enable_debug() -> None:
    # Package loggers pin their own level.
    for name in list(logging.root.manager.loggerDict):
        if name.startswith("shotnoise"):
            getLogger(name).setLevel(logging.DEBUG)


def _dispatch(args: Namespace) -> int:
    if args.command == "selfcheck":
        report = run_selfcheck(args.level)
        report.write(sys.stdout)

        return EXIT_OK if report.passed else EXIT_FAILURE

    cfg: ExperimentConfig = config_from_args(args)

    if args.command == "simulate":
        return run_simulate(cfg)

    return run_compare(cfg)


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line.

    Parameters
    ----------
    argv : sequence of str, default=None
        The arguments, sys.argv[1:] when None.

    Returns
    -------
    int
        0 on success, 1 on a failed check or a numerical failure, 2 on a
        usage or configuration error.

    """
    parser: ArgumentParser = build_parser()

    try:
        args: Namespace = parser.parse_args(argv)

    except SystemExit as err:
        return EXIT_OK if err.code in (0, None) else EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if args.verbose else INFO)

    if args.verbose:
        _enable_debug()

    try:
        return _dispatch(args)

    except (ConfigurationError, UnsupportedLawError, DomainError) as err:
        logger.error(f"{err}")
        sys.stderr.write(f"shotnoise: error: {err}\n")

        return EXIT_USAGE

    except ShotNoiseError as err:
        logger.error(f"{type(err).__name__}: {err}")
        sys.stderr.write(f"shotnoise: numerical failure: {err}\n")

        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
