"""Shared fixtures."""

from math import exp

import numpy as np
import pytest

from shotnoise.laws import LawSpec
from shotnoise.numerics import EULER_GAMMA
from shotnoise.simulator import ChainConfig

# Density of the fixed A = 1 law on [0, 1].
EXP_MINUS_GAMMA: float = exp(-EULER_GAMMA)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def small_chain() -> ChainConfig:
    return ChainConfig(n_steps=100, n_samples=5000, master_seed=7)


@pytest.fixture
def unit_spec() -> LawSpec:
    return LawSpec.parse("fixed:1", "det")
