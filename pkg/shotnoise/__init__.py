""".. include:: ../README.md"""

from .analytic import AnalyticLaw, analytic_law
from .laws import LawSpec, ShotNoiseParams
from .simulator import AsyncSampler, ChainConfig, Sampler, sample_stationary
from .transforms import law_transform, stationary_transform

__all__ = [
    "AnalyticLaw",
    "AsyncSampler",
    "ChainConfig",
    "LawSpec",
    "Sampler",
    "ShotNoiseParams",
    "analytic_law",
    "law_transform",
    "sample_stationary",
    "stationary_transform",
]
