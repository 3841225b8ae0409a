import pytest

from shotnoise.exceptions import ConfigurationError
from shotnoise.laws import (
    AmplitudeLaw,
    DeterministicOne,
    ExponentLaw,
    FixedExponent,
    GammaAmplitude,
    GammaMixedExponent,
    LawSpec,
    ShotNoiseParams,
    SymmetricLaplace,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("det", DeterministicOne()),
        ("gamma:0.5", GammaAmplitude(0.5)),
        ("Laplace:2", SymmetricLaplace(2.0)),
    ],
)
def test_amplitude_parse(text, expected):
    assert AmplitudeLaw.parse(text) == expected


@pytest.mark.parametrize(
    "text", ["uniform", "gamma", "gamma:x", "gamma:-1", "laplace:0", "det:1"]
)
def test_amplitude_parse_rejects(text):
    with pytest.raises(ConfigurationError):
        AmplitudeLaw.parse(text)


def test_exponent_parse():
    assert ExponentLaw.parse("fixed:1.5") == FixedExponent(1.5)
    assert ExponentLaw.parse("gamma:1") == GammaMixedExponent(1.0)

    with pytest.raises(ConfigurationError):
        ExponentLaw.parse("poisson:1")
    with pytest.raises(ConfigurationError):
        FixedExponent(0.0)


def test_symmetry_flag():
    assert SymmetricLaplace(1.0).symmetric
    assert not GammaAmplitude(1.0).symmetric
    assert not DeterministicOne().symmetric


def test_law_spec_text_forms():
    spec = LawSpec.from_text("gamma:1+laplace:2")

    assert spec == LawSpec(GammaMixedExponent(1.0), SymmetricLaplace(2.0))
    assert str(spec) == "gamma:1+laplace:2"
    assert LawSpec.from_text(str(spec)) == spec
    assert LawSpec() == LawSpec.parse("fixed:1", "det")

    with pytest.raises(ConfigurationError):
        LawSpec.from_text("gamma:1")


def test_shot_noise_params():
    params = ShotNoiseParams(lam=3.0, b=2.0)

    assert params.exponent == 1.5
    assert params.as_exponent_law() == FixedExponent(1.5)

    with pytest.raises(ConfigurationError):
        ShotNoiseParams(lam=0.0, b=1.0)
