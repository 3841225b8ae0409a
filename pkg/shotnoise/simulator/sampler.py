"""Class defining the thread-pool sampler."""

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from shotnoise.laws import AmplitudeLaw, LawSpec, ShotNoiseParams

from .base_sampler import BaseSampler, BlockKernel, logger
from .empirical import EmpiricalDistribution
from .options import ChainConfig


class Sampler(BaseSampler):
    """Class defining a sampler running blocks on a thread pool.

    Methods
    -------
    sample_stationary(spec)
        Sample U_(n_steps) of independent trajectories.
    sample_shot_noise(params, amplitude, t_end)
        Sample the continuous-time shot noise at t_end.

    """

    def _run(self, kernel: BlockKernel) -> EmpiricalDistribution:
        blocks = self._blocks()

        with ThreadPoolExecutor(max_workers=self.config.n_workers) as pool:
            parts: list[np.ndarray] = list(
                pool.map(lambda block: kernel(*block), blocks)
            )

        return self._merge(parts)

    def sample_stationary(self, spec: LawSpec) -> EmpiricalDistribution:
        """Sample the recurrence after n_steps iterations.

        Parameters
        ----------
        spec : laws.LawSpec
            The exponent and amplitude laws.

        Returns
        -------
        empirical.EmpiricalDistribution

        """
        logger.info(
            f"Sampling {spec}: {self.config.n_samples} trajectories of "
            f"{self.config.n_steps} steps, seed {self.config.master_seed}."
        )

        return self._run(self._chain_kernel(spec))

    def sample_shot_noise(
        self,
        params: ShotNoiseParams,
        amplitude: AmplitudeLaw,
        t_end: float,
    ) -> EmpiricalDistribution:
        """Sample Z(t_end) of independent shot-noise paths.

        Parameters
        ----------
        params : laws.ShotNoiseParams
            The rate Lambda and the decay B.
        amplitude : laws.AmplitudeLaw
            The law of the marks.
        t_end : float
            The observation time.

        Returns
        -------
        empirical.EmpiricalDistribution

        """
        return self._run(self._shot_noise_kernel(params, amplitude, t_end))


def sample_stationary(
    spec: LawSpec, config: ChainConfig
) -> EmpiricalDistribution:
    """Sample the stationary law of a parameterization.

    Parameters
    ----------
    spec : laws.LawSpec
        The exponent and amplitude laws.
    config : options.ChainConfig
        The run configuration.

    Returns
    -------
    empirical.EmpiricalDistribution

    """
    return Sampler.from_config(config).sample_stationary(spec)
