from math import exp, log, pi, sqrt

import pytest
from scipy import special

from shotnoise.exceptions import DomainError
from shotnoise.numerics import (
    EULER_GAMMA,
    bessel_I,
    bessel_I_series,
    bessel_K,
    bessel_K_integral,
    log_gamma,
    log_parabolic_cylinder_D,
    lower_incomplete_gamma_regularized,
    parabolic_cylinder_D,
    reciprocal_gamma_coeffs,
)


def test_reciprocal_gamma_leading_coefficients():
    coeffs = reciprocal_gamma_coeffs(10)

    assert coeffs.order == 10
    assert coeffs.coeffs[0] == 1.0
    assert coeffs.coeffs[1] == pytest.approx(EULER_GAMMA, abs=1e-15)
    assert coeffs.coeffs[2] == pytest.approx(-0.6558780715202538, abs=1e-12)


@pytest.mark.parametrize("x", [-0.5, 0.25, 0.5])
def test_reciprocal_gamma_series_matches_gamma(x):
    coeffs = reciprocal_gamma_coeffs(30)

    assert coeffs.evaluate(x) == pytest.approx(
        1.0 / special.gamma(1.0 + x), rel=1e-12
    )


@pytest.mark.parametrize("order", [0, 81])
def test_reciprocal_gamma_order_range(order):
    with pytest.raises(DomainError):
        reciprocal_gamma_coeffs(order)


def test_log_gamma():
    assert log_gamma(5.0) == pytest.approx(log(24.0))

    with pytest.raises(DomainError):
        log_gamma(0.0)


def test_lower_incomplete_gamma():
    assert lower_incomplete_gamma_regularized(1.0, 2.0) == pytest.approx(
        1.0 - exp(-2.0)
    )
    assert lower_incomplete_gamma_regularized(3.0, 0.0) == 0.0

    with pytest.raises(DomainError):
        lower_incomplete_gamma_regularized(1.0, -1.0)


def test_parabolic_cylinder_at_origin():
    # D_{-1}(0) = sqrt(pi/2)
    assert parabolic_cylinder_D(1.0, 0.0) == pytest.approx(
        sqrt(0.5 * pi), rel=1e-9
    )


@pytest.mark.parametrize("p, x", [(0.5, 1.0), (2.0, 0.3), (3.0, 2.5)])
def test_parabolic_cylinder_matches_scipy(p, x):
    expected = special.pbdv(-p, x)[0]

    assert parabolic_cylinder_D(p, x) == pytest.approx(expected, rel=1e-8)


def test_log_parabolic_cylinder_large_order():
    # Stays finite where D itself underflows.
    value = log_parabolic_cylinder_D(400.0, 30.0)

    assert value < -700.0
    assert value == pytest.approx(
        log_parabolic_cylinder_D(400.0, 30.0 + 1e-6), abs=1e-3
    )


def test_bessel_I():
    assert bessel_I(0.5, 2.0) == pytest.approx(special.iv(0.5, 2.0))
    assert bessel_I(1.0, 800.0, scaled=True) == pytest.approx(
        special.ive(1.0, 800.0)
    )
    assert bessel_I_series(1.5, 3.0) == pytest.approx(
        special.iv(1.5, 3.0), rel=1e-11
    )

    with pytest.raises(DomainError):
        bessel_I(-1.0, 1.0)


@pytest.mark.parametrize("representation", ["cosh", "laplace"])
def test_bessel_K_representations(representation):
    assert bessel_K_integral(0.5, 1.5, representation) == pytest.approx(
        bessel_K(0.5, 1.5), rel=1e-8
    )


def test_bessel_K_domain():
    with pytest.raises(DomainError):
        bessel_K(1.0, 0.0)
    with pytest.raises(DomainError):
        bessel_K_integral(1.0, 1.0, "mellin")
