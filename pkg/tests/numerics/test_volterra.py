from math import exp, log

import pytest
from scipy import special
from scipy.integrate import quad

from shotnoise.exceptions import DomainError
from shotnoise.numerics import (
    EULER_GAMMA,
    Z_SWITCH,
    fransen_wrigge_phi,
    volterra_mu,
    volterra_nu,
    volterra_nu_asymptotic,
)

FRANSEN_ROBINSON: float = 2.8077702420285193


def test_switch_point():
    assert Z_SWITCH == pytest.approx(exp(-1.0 - EULER_GAMMA))


def test_nu_at_one():
    assert volterra_nu(1.0) == pytest.approx(2.26653, rel=1e-5)


def test_phi_at_one_is_fransen_robinson_constant():
    assert fransen_wrigge_phi(1.0) == pytest.approx(
        FRANSEN_ROBINSON, rel=1e-9
    )


@pytest.mark.parametrize("z", [1e-3, 1e-2])
def test_nu_series_matches_quadrature(z):
    assert volterra_nu(z, method="series") == pytest.approx(
        volterra_nu(z, method="quadrature"), abs=1e-6
    )


def test_nu_asymptotic_error_bound_shrinks():
    _, far = volterra_nu_asymptotic(1e-2)
    _, near = volterra_nu_asymptotic(1e-8)

    assert near < far


@pytest.mark.parametrize("z", [0.1, 0.3, 1.0, 2.0, 5.0])
def test_phi_is_z_times_nu_derivative(z):
    h = 1e-4 * z
    derivative = (volterra_nu(z + h) - volterra_nu(z - h)) / (2.0 * h)

    assert z * derivative == pytest.approx(fransen_wrigge_phi(z), rel=1e-5)


@pytest.mark.parametrize("z", [0.2, 1.0, 3.0])
def test_mu_reduces_to_nu(z):
    assert volterra_mu(z, 0.0) == pytest.approx(volterra_nu(z), rel=1e-9)


def test_mu_derivative_lowers_shift():
    # d/dz mu(z, b, a) = mu(z, b, a - 1)
    z, b, a, h = 1.5, 1.0, 0.5, 1e-5
    derivative = (volterra_mu(z + h, b, a) - volterra_mu(z - h, b, a)) / (
        2.0 * h
    )

    assert derivative == pytest.approx(volterra_mu(z, b, a - 1.0), rel=1e-5)


def test_mu_against_direct_quadrature():
    z, b = 0.7, 2.0
    expected, _ = quad(
        lambda t: z**t * t**b / (special.gamma(b + 1) * special.gamma(t + 1)),
        0.0,
        60.0,
        epsabs=1e-14,
        epsrel=1e-12,
        limit=200,
    )

    assert volterra_mu(z, b) == pytest.approx(expected, rel=1e-7)


def test_nu_small_argument_behaviour():
    # nu(z) ~ 1 / ln(1/z) as z -> 0
    z = 1e-30

    assert volterra_nu(z) * log(1.0 / z) == pytest.approx(1.0, abs=0.05)


@pytest.mark.parametrize("z", [0.0, -1.0])
def test_non_positive_argument(z):
    with pytest.raises(DomainError):
        volterra_nu(z)
    with pytest.raises(DomainError):
        fransen_wrigge_phi(z)


def test_domain_errors():
    with pytest.raises(DomainError):
        volterra_mu(1.0, -0.5)
    with pytest.raises(DomainError):
        volterra_mu(1.0, 0.0, -2.0)
    with pytest.raises(DomainError):
        volterra_nu_asymptotic(1.5)
    with pytest.raises(DomainError):
        volterra_nu(0.5, method="taylor")
