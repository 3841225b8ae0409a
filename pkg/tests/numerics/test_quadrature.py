from math import asinh, cos, e, exp, log, nan, pi, sqrt

import numpy as np
import pytest
from numpy.polynomial import polynomial as P
from scipy import special
from scipy.integrate import quad

from shotnoise.exceptions import (
    ConfigurationError,
    DomainError,
    IntegrandError,
)
from shotnoise.numerics import (
    QuadratureConfig,
    integrate_finite,
    integrate_oscillatory_sine,
    integrate_semi_infinite,
)


@pytest.mark.parametrize(
    "f, a, b, expected",
    [
        (lambda x: x**-0.5, 0.0, 1.0, 2.0),
        (lambda x: x * x, 0.0, 3.0, 9.0),
        (lambda x: (x - 1.0) ** -0.5, 1.0, 2.0, 2.0),
    ],
)
def test_integrate_finite(f, a, b, expected):
    result = integrate_finite(f, a, b)

    assert result.value == pytest.approx(expected, abs=1e-8)
    assert result.converged
    assert result.evaluations > 0
    assert float(result) == result.value


def test_integrate_finite_empty_and_reversed():
    assert integrate_finite(lambda x: 1.0, 2.0, 2.0).value == 0.0

    with pytest.raises(DomainError):
        integrate_finite(lambda x: 1.0, 2.0, 1.0)


def test_nan_integrand_raises():
    with pytest.raises(IntegrandError):
        integrate_finite(lambda x: nan, 0.0, 1.0)


def test_integrate_semi_infinite():
    assert integrate_semi_infinite(
        lambda x: exp(-x), 0.0, 1.0
    ).value == pytest.approx(1.0, abs=1e-8)
    # int_0^inf exp(-x^2) = sqrt(pi)/2
    assert integrate_semi_infinite(
        lambda x: exp(-x * x), 0.0, 1.0
    ).value == pytest.approx(0.5 * sqrt(pi), abs=1e-8)


def test_semi_infinite_needs_positive_hint():
    with pytest.raises(DomainError):
        integrate_semi_infinite(lambda x: exp(-x), 0.0, 0.0)


def test_semi_infinite_reports_missing_decay():
    cfg = QuadratureConfig(max_subdivisions=5)
    result = integrate_semi_infinite(lambda x: 1.0, 0.0, 1.0, cfg)

    assert not result.converged


def test_sine_integral():
    result = integrate_oscillatory_sine(lambda x: 1.0)

    assert result.value == pytest.approx(0.5 * pi, abs=1e-6)
    assert result.converged


def test_damped_sine_integral():
    # int_0^inf sin(x)/x exp(-x) dx = arctan(1)
    result = integrate_oscillatory_sine(lambda x: exp(-x))

    assert result.value == pytest.approx(0.25 * pi, abs=1e-7)


def test_config_validation():
    with pytest.raises(ConfigurationError):
        QuadratureConfig(abs_tol=0.0)
    with pytest.raises(ConfigurationError):
        QuadratureConfig(max_subdivisions=0)

    cfg = QuadratureConfig.from_options({"rel_tol": "1e-6"})

    assert cfg.rel_tol == 1e-6
    assert cfg.tolerance_for(1e6) == pytest.approx(1.0)


def _slack(*results):
    return sum(result.error_estimate for result in results) + 1e-12


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_integrate_finite_is_linear(seed):
    rng = np.random.default_rng(seed)
    f_coeffs, g_coeffs = rng.normal(size=(2, 6))
    alpha, beta = rng.normal(size=2)
    a, b = sorted(rng.uniform(-2.0, 2.0, size=2))

    combined = integrate_finite(
        lambda x: alpha * P.polyval(x, f_coeffs)
        + beta * P.polyval(x, g_coeffs),
        a,
        b,
    )
    f_part = integrate_finite(lambda x: P.polyval(x, f_coeffs), a, b)
    g_part = integrate_finite(lambda x: P.polyval(x, g_coeffs), a, b)
    expected = alpha * f_part.value + beta * g_part.value

    assert abs(combined.value - expected) <= (
        combined.error_estimate
        + abs(alpha) * f_part.error_estimate
        + abs(beta) * g_part.error_estimate
        + 1e-12
    )


@pytest.mark.parametrize("middle", [0.3, 1.3, 2.9])
def test_integrate_finite_is_additive(middle):
    def f(x):
        return x**-0.5 + cos(x)

    whole = integrate_finite(f, 0.0, 3.0)
    left = integrate_finite(f, 0.0, middle)
    right = integrate_finite(f, middle, 3.0)

    assert abs(whole.value - left.value - right.value) <= _slack(
        whole, left, right
    )


@pytest.mark.parametrize(
    "f, a, b, exact",
    [
        (lambda x: x**-0.5, 0.0, 1.0, 2.0),
        (lambda x: sqrt(x), 0.0, 1.0, 2.0 / 3.0),
        (lambda x: log(x), 0.0, 1.0, -1.0),
        (lambda x: exp(x), 0.0, 1.0, e - 1.0),
        (lambda x: 1.0 / (1.0 + x * x), 0.0, 1.0, 0.25 * pi),
        (lambda x: (x - 1.0) ** -0.5 / x**0.5, 1.0, 2.0, 2.0 * asinh(1.0)),
    ],
)
def test_error_estimate_bounds_true_error(f, a, b, exact):
    result = integrate_finite(f, a, b)

    assert abs(result.value - exact) <= _slack(result)


def test_singular_endpoint_with_half_exponent():
    # (eta - 1)^(A - 1) / eta^A at A = 1/2 integrates to 2 asinh(1).
    result = integrate_finite(
        lambda eta: (eta - 1.0) ** -0.5 / sqrt(eta), 1.0, 2.0
    )

    assert result.value == pytest.approx(2.0 * asinh(1.0), abs=1e-8)


def test_semi_infinite_gaussian_weight():
    # int_0^inf xi exp(-xi - xi^2/2) = 1 - e^(1/2) sqrt(pi/2) erfc(1/sqrt 2)
    expected = 1.0 - exp(0.5) * sqrt(0.5 * pi) * special.erfc(sqrt(0.5))
    result = integrate_semi_infinite(
        lambda xi: xi * exp(-xi - 0.5 * xi * xi), 0.0, 1.0
    )

    assert result.value == pytest.approx(expected, abs=1e-8)
    assert abs(result.value - expected) <= _slack(result)


def test_sine_integral_with_slowly_decaying_weight():
    def h(xi):
        return 1.0 / (1.0 + 0.5 * log(1.0 + (0.5 * xi) ** 2))

    head, _ = quad(lambda xi: np.sinc(xi / pi) * h(xi), 0.0, 1.0)
    tail, _ = quad(lambda xi: h(xi) / xi, 1.0, np.inf, weight="sin", wvar=1.0)
    result = integrate_oscillatory_sine(h)

    assert result.value == pytest.approx(head + tail, abs=1e-5)
