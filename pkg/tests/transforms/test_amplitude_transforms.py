from math import exp, log, log1p, sqrt

import pytest
from scipy import special
from scipy.integrate import quad

from shotnoise.exceptions import DomainError
from shotnoise.laws import (
    DeterministicOne,
    FixedExponent,
    GammaAmplitude,
    GammaMixedExponent,
    LawSpec,
    SymmetricLaplace,
)
from shotnoise.numerics import EULER_GAMMA
from shotnoise.transforms import (
    amplitude_transform,
    ein,
    exponent_integral,
    law_transform,
    small_s_expansion_coeffs,
    stationary_transform,
)
from shotnoise.transforms.inversion import laplace_kernel


def test_amplitude_transform():
    assert amplitude_transform(DeterministicOne(), 2.0) == pytest.approx(
        exp(-2.0)
    )
    assert amplitude_transform(GammaAmplitude(2.0), 1.0) == pytest.approx(
        0.25
    )
    assert amplitude_transform(SymmetricLaplace(1.0), 3.0) == pytest.approx(
        0.1
    )

    with pytest.raises(DomainError):
        amplitude_transform(DeterministicOne(), -1.0)


@pytest.mark.parametrize("s", [1e-6, 0.3, 0.999, 1.0, 2.5, 40.0])
def test_ein_matches_quadrature(s):
    expected, _ = quad(
        lambda x: -special.expm1(-x) / x, 0.0, s, epsabs=1e-14, epsrel=1e-13
    )

    assert ein(s) == pytest.approx(expected, rel=1e-11)


def test_ein_large_argument():
    assert ein(50.0) == pytest.approx(EULER_GAMMA + log(50.0), rel=1e-14)


@pytest.mark.parametrize("beta", [0.5, 1.0, 1.5, 2.0, 3.0])
@pytest.mark.parametrize("s", [0.2, 1.0, 7.0])
def test_gamma_exponent_integral(beta, s):
    expected, _ = quad(
        lambda x: -special.expm1(-beta * log1p(x)) / x,
        0.0,
        s,
        epsabs=1e-14,
        epsrel=1e-13,
    )

    assert exponent_integral(GammaAmplitude(beta), s) == pytest.approx(
        expected, rel=1e-10
    )


@pytest.mark.parametrize("beta", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("s", [0.1, 1.0, 12.0])
def test_symmetric_exponent_integral_is_laplace_kernel(beta, s):
    assert exponent_integral(SymmetricLaplace(beta), s) == pytest.approx(
        laplace_kernel(beta)(s), rel=1e-12
    )


def test_exponent_integral_at_zero():
    assert exponent_integral(DeterministicOne(), 0.0) == 0.0
    assert exponent_integral(GammaAmplitude(1.5), 0.0) == 0.0


def test_stationary_transform_fixed_and_mixed():
    s = 1.7
    integral = ein(s)

    assert stationary_transform(
        FixedExponent(2.0), DeterministicOne(), s
    ) == pytest.approx(exp(-2.0 * integral))
    assert stationary_transform(
        GammaMixedExponent(0.5), DeterministicOne(), s
    ) == pytest.approx((1.0 + integral) ** -0.5)


def test_transform_of_gamma_amplitudes():
    # Gamma(1) exponent and Gamma(1) amplitudes: 1 / (1 + ln(1 + s))
    spec = LawSpec.parse("gamma:1", "gamma:1")

    for s in (0.0, 1.0, 9.0):
        assert law_transform(spec, s) == pytest.approx(1.0 / (1.0 + log1p(s)))


def test_fixed_gamma_transform_is_gamma_law():
    # A = 3 with Gamma(1) amplitudes is the Gamma(3) law: (1 + s)^-3
    spec = LawSpec.parse("fixed:3", "gamma:1")

    assert law_transform(spec, 0.5) == pytest.approx(1.5**-3)


def test_transform_is_one_at_zero():
    spec = LawSpec.parse("gamma:2", "laplace:0.5")

    assert law_transform(spec, 0.0) == 1.0


def test_small_s_expansion_coeffs():
    coeffs = small_s_expansion_coeffs(4)

    assert coeffs[:2] == [1.0, -0.25]
    assert coeffs[2] == pytest.approx(1.0 / 18.0)
    assert coeffs[3] == pytest.approx(-1.0 / 96.0)
    assert sum(c * 0.01**k for k, c in enumerate(coeffs, 1)) == pytest.approx(
        ein(0.01), rel=1e-10
    )


@pytest.mark.parametrize("order", [1, 21])
def test_small_s_expansion_order_range(order):
    with pytest.raises(DomainError):
        small_s_expansion_coeffs(order)


def test_half_shape_kernel_closed_form():
    s = 3.0

    assert exponent_integral(GammaAmplitude(0.5), s) == pytest.approx(
        2.0 * log(0.5 * (1.0 + sqrt(1.0 + s)))
    )
