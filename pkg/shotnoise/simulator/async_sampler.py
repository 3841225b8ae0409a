"""Class defining the asynchronous sampler."""

from asyncio import Semaphore, gather, to_thread

import numpy as np

from shotnoise.laws import AmplitudeLaw, LawSpec, ShotNoiseParams

from .base_sampler import BaseSampler, BlockKernel, logger
from .empirical import EmpiricalDistribution


class AsyncSampler(BaseSampler):
    """Class defining a sampler that awaits its blocks.

    Blocks run in worker threads through asyncio.to_thread, at most
    n_workers at a time.

    Methods
    -------
    sample_stationary(spec)
        Sample U_(n_steps) of independent trajectories.
    sample_shot_noise(params, amplitude, t_end)
        Sample the continuous-time shot noise at t_end.

    """

    async def _run(self, kernel: BlockKernel) -> EmpiricalDistribution:
        limit = Semaphore(self.config.n_workers)

        async def run_block(rng: np.random.Generator, size: int) -> np.ndarray:
            async with limit:
                return await to_thread(kernel, rng, size)

        parts: list[np.ndarray] = list(
            await gather(*(run_block(*block) for block in self._blocks()))
        )

        return self._merge(parts)

    async def sample_stationary(self, spec: LawSpec) -> EmpiricalDistribution:
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

        return await self._run(self._chain_kernel(spec))

    async def sample_shot_noise(
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
        return await self._run(
            self._shot_noise_kernel(params, amplitude, t_end)
        )
