"""Sampler base class."""

from abc import ABC
from logging import DEBUG, INFO, Logger, getLogger
from typing import Any, Callable

import numpy as np

from shotnoise.laws import AmplitudeLaw, LawSpec, ShotNoiseParams

from .chain import iterate_chains, simulate_shot_noise_paths
from .empirical import EmpiricalDistribution
from .options import ChainConfig, SamplerOptions

logger: Logger = getLogger("shotnoise.simulator")
logger.setLevel(INFO)

# (block generator, block size) -> samples of the block
BlockKernel = Callable[[np.random.Generator, int], np.ndarray]


class BaseSampler(ABC):
    """Base for creating sampler classes.

    Splits a run into blocks of at most block_size trajectories. Block i
    draws from its own generator, spawned as child i of the master seed,
    and blocks are merged by index, so the result does not depend on how
    many workers run them.

    Attributes
    ----------
    options : options.SamplerOptions
        The sampling options.

    Methods
    -------
    block_generators()
        Get one generator per block.

    """

    def __init__(self, options: dict[str, Any]) -> None:
        """Initialize sampler.

        Parameters
        ----------
        options : dict
            The options as a dict.

        """
        self.options: SamplerOptions = SamplerOptions(options)

        if self.options.debug:
            logger.setLevel(DEBUG)

    @classmethod
    def from_config(cls, config: ChainConfig, debug: bool = False) -> Any:
        """Build a sampler from a chain configuration.

        Parameters
        ----------
        config : options.ChainConfig
            The run configuration.
        debug : bool, default=False
            Whether to log at DEBUG level.

        Returns
        -------
        BaseSampler

        """
        return cls(
            {
                "debug": debug,
                "n_steps": config.n_steps,
                "n_samples": config.n_samples,
                "master_seed": config.master_seed,
                "n_workers": config.n_workers,
                "block_size": config.block_size,
            }
        )

    # Properties ##############################################################

    @property
    def config(self) -> ChainConfig:
        """Get the immutable run configuration.

        Returns
        -------
        options.ChainConfig

        """
        return self.options.chain

    # Methods #################################################################

    def block_generators(self) -> list[np.random.Generator]:
        """Get one PCG64 generator per block.

        Returns
        -------
        list of numpy.random.Generator

        """
        seeds = np.random.SeedSequence(self.config.master_seed).spawn(
            self.config.n_blocks
        )

        return [np.random.Generator(np.random.PCG64(seed)) for seed in seeds]

    def _chain_kernel(self, spec: LawSpec) -> BlockKernel:
        n_steps: int = self.config.n_steps

        def kernel(rng: np.random.Generator, size: int) -> np.ndarray:
            return iterate_chains(spec, n_steps, rng, size)

        return kernel

    def _shot_noise_kernel(
        self, params: ShotNoiseParams, amplitude: AmplitudeLaw, t_end: float
    ) -> BlockKernel:
        def kernel(rng: np.random.Generator, size: int) -> np.ndarray:
            return simulate_shot_noise_paths(
                params, amplitude, t_end, rng, size
            )

        return kernel

    def _blocks(self) -> list[tuple[np.random.Generator, int]]:
        blocks = list(zip(self.block_generators(), self.config.block_sizes()))

        logger.debug(
            f"{self.config.n_samples} samples in {len(blocks)} blocks "
            f"on {self.config.n_workers} workers."
        )

        return blocks

    @staticmethod
    def _merge(parts: list[np.ndarray]) -> EmpiricalDistribution:
        return EmpiricalDistribution(np.concatenate(parts))
