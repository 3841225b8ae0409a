from logging import WARNING
from math import exp, pi, sqrt

import pytest
from scipy.integrate import quad

from shotnoise.exceptions import (
    DomainError,
    InvalidApproximationError,
    UnsupportedLawError,
)
from shotnoise.transforms import (
    ExponentialSumApprox,
    abs_cdf_from_characteristic,
    exponential_sum_tail,
    fixed_exponent_abs_cdf,
    fourier_cdf_inversion,
    laplace_kernel,
    tail_cdf_xi,
    tail_density_aleph,
)


def test_two_term_tail_mass():
    expected = 1.0 / sqrt(2.0)
    mass, _ = quad(tail_density_aleph, 0.0, float("inf"))

    assert exponential_sum_tail(2).mass == pytest.approx(expected, abs=1e-12)
    assert mass == pytest.approx(expected, rel=1e-9)


def test_two_term_tail_rates_and_weights():
    tail = exponential_sum_tail(2)
    rates = sorted(rate.real for rate in tail.rates)

    assert tail.order == 2
    assert rates == pytest.approx(
        [2.0 * sqrt(2.0) - 2.0, 2.0 * sqrt(2.0) + 2.0]
    )

    for u in (0.0, 0.5, 3.0):
        assert tail.density(u) == pytest.approx(
            tail_density_aleph(u), abs=1e-12
        )
        assert tail.cdf(u) == pytest.approx(tail_cdf_xi(u), abs=1e-12)


def test_tail_cdf_at_origin():
    assert tail_cdf_xi(0.0) == pytest.approx(1.0 - 1.0 / sqrt(2.0))
    assert tail_density_aleph(0.0) == 0.0


def test_tail_cdf_derivative_is_density():
    u, h = 2.5, 1e-6
    derivative = (tail_cdf_xi(u + h) - tail_cdf_xi(u - h)) / (2.0 * h)

    assert derivative == pytest.approx(tail_density_aleph(u), rel=1e-7)


def test_tail_vectorized():
    tail = exponential_sum_tail(2)
    values = tail.density([1.0, 2.0])

    assert values.shape == (2,)
    assert values[1] == pytest.approx(tail_density_aleph(2.0))


def test_two_term_tail_is_nonnegative():
    tail = exponential_sum_tail(2)

    assert not tail.has_negative_lobe
    assert tail.min_density() == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("N", [3, 4, 8, 20])
def test_longer_tails_come_in_conjugate_pairs(N):
    tail = exponential_sum_tail(N)
    rates = sorted(tail.rates, key=lambda r: (r.real, r.imag))
    mirrored = sorted(
        (r.conjugate() for r in tail.rates), key=lambda r: (r.real, r.imag)
    )

    assert tail.order == N
    assert rates == pytest.approx(mirrored)
    assert isinstance(tail.density(1.0), float)


def test_four_term_tail_mass_and_negative_lobe(caplog):
    with caplog.at_level(WARNING, logger="shotnoise.tails"):
        tail = exponential_sum_tail(4)
    integral, _ = quad(tail.density, 0.0, float("inf"), limit=200)

    # The mass is reported, not renormalized.
    assert tail.mass == pytest.approx(0.622, abs=2e-3)
    assert integral == pytest.approx(tail.mass, rel=1e-8)
    assert tail.density(3.0) == pytest.approx(-0.025, abs=2e-3)
    assert tail.has_negative_lobe
    assert "4-term tail density dips" in caplog.text


def test_twenty_term_tail_keeps_its_negative_lobe():
    tail = exponential_sum_tail(20)

    assert tail.density(3.0) == pytest.approx(-0.015, abs=2e-3)
    assert tail.has_negative_lobe
    assert abs(tail.density(3.0)) < abs(exponential_sum_tail(4).density(3.0))


def test_tail_rejects_other_shapes():
    with pytest.raises(UnsupportedLawError):
        exponential_sum_tail(2, alpha=2.0)


def test_non_decaying_rate_rejected():
    with pytest.raises(InvalidApproximationError):
        ExponentialSumApprox((complex(-1.0, 0.0),), (complex(1.0, 0.0),))
    with pytest.raises(InvalidApproximationError):
        ExponentialSumApprox((complex(1.0, 0.0),), ())


@pytest.mark.parametrize("u", [0.2, 1.0, 3.0])
def test_inversion_recovers_laplace_law(u):
    # A = 2 and beta = 1 give c(t) = 1 / (1 + t^2), P(|U| <= u) = 1 - e^-u.
    result = fixed_exponent_abs_cdf(laplace_kernel(1.0), 2.0, u)

    assert result.value == pytest.approx(1.0 - exp(-u), abs=1e-5)
    assert not result.clamped


def test_inversion_of_gaussian():
    u = 1.0
    result = abs_cdf_from_characteristic(lambda t: exp(-0.5 * t * t), u)
    # P(|Z| <= 1) for a standard normal Z
    assert result.value == pytest.approx(0.6826894921, abs=1e-6)


def test_mixed_inversion_is_monotone():
    kernel = laplace_kernel(1.0)
    values = [fourier_cdf_inversion(kernel, u).value for u in (0.5, 1, 2, 4)]

    assert all(0.0 <= value <= 1.0 for value in values)
    assert values == sorted(values)


def test_inversion_domain():
    with pytest.raises(DomainError):
        fourier_cdf_inversion(laplace_kernel(1.0), 0.0)


def test_unknown_kernel():
    with pytest.raises(UnsupportedLawError):
        laplace_kernel(3.0)

    assert laplace_kernel(1)(0.0) == 0.0
    assert laplace_kernel(0.5)(pi) > 0.0
