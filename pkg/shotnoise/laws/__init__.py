"""Classes defining the laws of the recurrence parameters."""

from .amplitude import (
    AmplitudeLaw,
    DeterministicOne,
    GammaAmplitude,
    SymmetricLaplace,
)
from .exponent import ExponentLaw, FixedExponent, GammaMixedExponent
from .law_spec import LawSpec
from .shot_noise_params import ShotNoiseParams

__all__ = [
    "AmplitudeLaw",
    "DeterministicOne",
    "ExponentLaw",
    "FixedExponent",
    "GammaAmplitude",
    "GammaMixedExponent",
    "LawSpec",
    "ShotNoiseParams",
    "SymmetricLaplace",
]
