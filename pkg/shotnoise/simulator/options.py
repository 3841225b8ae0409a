"""Monte Carlo sampling settings classes."""

from dataclasses import dataclass
from os import environ
from typing import Any

from shotnoise.exceptions import ConfigurationError

WORKERS_ENV: str = "SHOTNOISE_WORKERS"
DEFAULT_STEPS: int = 400
DEFAULT_BLOCK_SIZE: int = 65536


def default_workers() -> int:
    """Get the worker count from SHOTNOISE_WORKERS, else 1.

    Returns
    -------
    int

    Raises
    ------
    ConfigurationError
        If the variable is not a positive integer.

    """
    value: str = environ.get(WORKERS_ENV, "1")

    try:
        workers = int(value)

    except ValueError as err:
        raise ConfigurationError(
            f"{WORKERS_ENV} must be an integer, got '{value}'."
        ) from err

    if workers < 1:
        raise ConfigurationError(f"{WORKERS_ENV} must be >= 1, got {workers}.")

    return workers


@dataclass(frozen=True)
class ChainConfig:
    """Class defining the immutable core of a sampling run.

    The samples depend only on master_seed, n_samples, n_steps, block_size
    and the law, never on n_workers.

    Attributes
    ----------
    n_steps : int, default=400
        Iterations per trajectory.
    n_samples : int, default=100000
        Number of independent trajectories.
    master_seed : int, default=0
        Seed every block generator derives from.
    n_workers : int, default=1
        Number of worker threads.
    block_size : int, default=65536
        Trajectories per block; each block owns one generator.

    """

    n_steps: int = DEFAULT_STEPS
    n_samples: int = 100_000
    master_seed: int = 0
    n_workers: int = 1
    block_size: int = DEFAULT_BLOCK_SIZE

    def __post_init__(self) -> None:
        """Validate the configuration.

        Raises
        ------
        ConfigurationError
            If a count is not positive or the seed is negative.

        """
        for name in ("n_steps", "n_samples", "n_workers", "block_size"):
            if getattr(self, name) < 1:
                raise ConfigurationError(
                    f"{name} must be >= 1, got {getattr(self, name)}."
                )

        if self.master_seed < 0:
            raise ConfigurationError(
                f"master_seed must be >= 0, got {self.master_seed}."
            )

    @property
    def n_blocks(self) -> int:
        """Get the number of blocks.

        Returns
        -------
        int

        """
        return -(-self.n_samples // self.block_size)

    def block_sizes(self) -> list[int]:
        """Get the number of trajectories of each block.

        Returns
        -------
        list of int

        """
        sizes: list[int] = [self.block_size] * self.n_blocks
        sizes[-1] = self.n_samples - self.block_size * (self.n_blocks - 1)

        return sizes


class SamplerOptions:
    """Class to define and group the sampling options.

    Attributes
    ----------
    debug : bool, default=False
        Whether to log at DEBUG level.
    n_steps : int, default=400
        Iterations per trajectory.
    n_samples : int, default=100000
        Number of independent trajectories.
    master_seed : int, default=0
        Seed every block generator derives from.
    n_workers : int, default=$SHOTNOISE_WORKERS or 1
        Number of worker threads.
    block_size : int, default=65536
        Trajectories per block.

    """

    def __init__(self, options: dict[str, Any]) -> None:
        """Initialize the options.

        Parameters
        ----------
        options : dict
            The sampler options as a dict.

        Raises
        ------
        ConfigurationError
            If a value is out of range.

        """
        self.debug: bool = options.get("debug", False)
        self.n_steps: int = int(options.get("n_steps", DEFAULT_STEPS))
        self.n_samples: int = int(options.get("n_samples", 100_000))
        self.master_seed: int = int(options.get("master_seed", 0))
        self.n_workers: int = int(
            options.get("n_workers") or default_workers()
        )
        self.block_size: int = int(
            options.get("block_size", DEFAULT_BLOCK_SIZE)
        )
        self.chain: ChainConfig = ChainConfig(
            self.n_steps,
            self.n_samples,
            self.master_seed,
            self.n_workers,
            self.block_size,
        )
