"""Monte Carlo sampling of the recurrence and of the shot-noise process."""

from .async_sampler import AsyncSampler
from .chain import (
    iterate_chain,
    iterate_chains,
    sample_amplitude,
    sample_amplitudes,
    sample_exponent,
    sample_exponents,
    simulate_shot_noise,
    simulate_shot_noise_paths,
)
from .empirical import EmpiricalDistribution, HistogramDensity
from .options import ChainConfig, SamplerOptions
from .sampler import Sampler, sample_stationary
