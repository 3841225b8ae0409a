import asyncio

import numpy as np
import pytest

from shotnoise.exceptions import ConfigurationError
from shotnoise.laws import DeterministicOne, LawSpec, ShotNoiseParams
from shotnoise.simulator import (
    AsyncSampler,
    ChainConfig,
    Sampler,
    SamplerOptions,
    sample_stationary,
)
from shotnoise.transforms import law_transform


@pytest.mark.parametrize(
    "field", ["n_steps", "n_samples", "n_workers", "block_size"]
)
def test_chain_config_rejects_non_positive_counts(field):
    with pytest.raises(ConfigurationError):
        ChainConfig(**{field: 0})


def test_chain_config_rejects_negative_seed():
    with pytest.raises(ConfigurationError):
        ChainConfig(master_seed=-1)


def test_chain_config_blocks():
    config = ChainConfig(n_samples=2500, block_size=1000)

    assert config.n_blocks == 3
    assert config.block_sizes() == [1000, 1000, 500]
    assert ChainConfig(n_samples=2000, block_size=1000).block_sizes() == [
        1000,
        1000,
    ]


def test_workers_from_environment(monkeypatch):
    monkeypatch.setenv("SHOTNOISE_WORKERS", "3")

    assert SamplerOptions({}).n_workers == 3
    assert SamplerOptions({"n_workers": 2}).n_workers == 2


@pytest.mark.parametrize("value", ["many", "0"])
def test_invalid_workers_environment(monkeypatch, value):
    monkeypatch.setenv("SHOTNOISE_WORKERS", value)

    with pytest.raises(ConfigurationError):
        SamplerOptions({})


def test_from_config_round_trip(small_chain):
    sampler = Sampler.from_config(small_chain)

    assert sampler.config == small_chain
    assert len(sampler.block_generators()) == small_chain.n_blocks


def test_samples_do_not_depend_on_workers(unit_spec):
    single = ChainConfig(
        n_steps=50, n_samples=3000, master_seed=11, block_size=700
    )
    pooled = ChainConfig(
        n_steps=50,
        n_samples=3000,
        master_seed=11,
        n_workers=4,
        block_size=700,
    )

    np.testing.assert_array_equal(
        sample_stationary(unit_spec, single).samples,
        sample_stationary(unit_spec, pooled).samples,
    )


def test_seed_changes_samples(unit_spec, small_chain):
    other = ChainConfig(
        n_steps=small_chain.n_steps,
        n_samples=small_chain.n_samples,
        master_seed=small_chain.master_seed + 1,
    )

    assert not np.array_equal(
        sample_stationary(unit_spec, small_chain).samples,
        sample_stationary(unit_spec, other).samples,
    )


def test_async_sampler_matches_thread_pool(unit_spec):
    config = ChainConfig(
        n_steps=40, n_samples=2000, master_seed=5, n_workers=3, block_size=300
    )
    expected = Sampler.from_config(config).sample_stationary(unit_spec)
    awaited = asyncio.run(
        AsyncSampler.from_config(config).sample_stationary(unit_spec)
    )

    np.testing.assert_array_equal(awaited.samples, expected.samples)


def test_async_shot_noise(small_chain):
    params = ShotNoiseParams(1.0, 2.0)
    empirical = asyncio.run(
        AsyncSampler.from_config(small_chain).sample_shot_noise(
            params, DeterministicOne(), 20.0
        )
    )

    assert empirical.size == small_chain.n_samples
    assert empirical.samples.mean() == pytest.approx(0.5, abs=0.05)


@pytest.mark.parametrize(
    "text, kind, s",
    [
        ("gamma:1+gamma:1", "laplace", 1.0),
        ("fixed:1+det", "laplace", 2.0),
        ("fixed:2+laplace:1", "cosine", 1.0),
        ("gamma:1+laplace:2", "cosine", 0.5),
    ],
)
def test_empirical_transform_matches_closed_form(text, kind, s):
    spec = LawSpec.from_text(text)
    config = ChainConfig(n_steps=200, n_samples=20_000, master_seed=3)
    mean, std_error = sample_stationary(spec, config).empirical_transform(
        s, kind
    )

    assert abs(mean - law_transform(spec, s)) < 4.0 * std_error + 1e-4
