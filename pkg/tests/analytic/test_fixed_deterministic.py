from math import exp, inf, lgamma, log

import numpy as np
import pytest
from scipy.integrate import quad

from shotnoise.analytic import (
    DelayTable,
    FixedDeterministicLaw,
    fixed_A_cdf,
    fixed_A_density,
    solve_delay_dde,
)
from shotnoise.exceptions import DomainError
from shotnoise.numerics import EULER_GAMMA

from ..conftest import EXP_MINUS_GAMMA


def test_unit_interval_density():
    assert fixed_A_density(1.0, 0.3) == pytest.approx(EXP_MINUS_GAMMA)
    assert fixed_A_density(2.0, 0.5) == pytest.approx(
        exp(-2.0 * EULER_GAMMA) * 0.5
    )
    assert fixed_A_density(0.5, 0.25) == pytest.approx(
        exp(-0.5 * EULER_GAMMA - lgamma(0.5)) * 0.25**-0.5
    )


def test_second_interval_closed_form():
    for u in (1.2, 1.5, 2.0):
        assert fixed_A_density(1.0, u) == pytest.approx(
            EXP_MINUS_GAMMA * (1.0 - log(u)), abs=1e-10
        )


def test_density_at_origin_and_below():
    assert fixed_A_density(0.5, 0.0) == inf
    assert fixed_A_density(1.0, 0.0) == pytest.approx(EXP_MINUS_GAMMA)
    assert fixed_A_density(3.0, 0.0) == 0.0
    assert fixed_A_density(1.0, -1.0) == 0.0


def test_cdf_at_one():
    assert fixed_A_cdf(1.0, 1.0) == pytest.approx(EXP_MINUS_GAMMA)


def test_cdf_on_second_interval():
    u = 1.5

    assert fixed_A_cdf(1.0, u) == pytest.approx(
        EXP_MINUS_GAMMA * (2.0 * u - 1.0 - u * log(u)), abs=1e-10
    )


@pytest.mark.parametrize("A", [0.5, 1.0, 2.5])
def test_cdf_derivative_is_density(A):
    u, h = 2.6, 1e-4
    derivative = (fixed_A_cdf(A, u + h) - fixed_A_cdf(A, u - h)) / (2 * h)

    assert derivative == pytest.approx(fixed_A_density(A, u), rel=1e-3)


@pytest.mark.parametrize("A", [0.5, 1.0, 2.0])
def test_total_mass(A):
    assert fixed_A_cdf(A, 14.0) == pytest.approx(1.0, abs=1e-3)


def test_delay_table_matches_closed_form():
    table = solve_delay_dde(1.0, 3.0)
    points = np.linspace(0.05, 2.0, 40)
    gap = max(abs(table.density(u) - fixed_A_density(1.0, u)) for u in points)

    assert isinstance(table, DelayTable)
    assert gap < 1e-6
    assert table.u_max == 3.0
    assert table.richardson_gap < 1e-5


def test_delay_table_mass():
    assert solve_delay_dde(1.0, 12.0).mass() == pytest.approx(1.0, abs=1e-3)


def test_delay_table_is_a_density_beyond_two():
    table = solve_delay_dde(1.0, 6.0, check=False)

    assert np.all(table.f[table.u > 2.0] > 0.0)
    assert np.all(np.diff(table.f[table.u > 1.0]) < 0.0)


def test_delay_table_outside_range():
    table = solve_delay_dde(1.0, 3.0, check=False)

    with pytest.raises(DomainError):
        table.density(3.5)


@pytest.mark.parametrize(
    "A, u_max, step", [(0.0, 3.0, 1e-3), (1.0, 2.0, 1e-3), (1.0, 3.0, 0.03)]
)
def test_delay_table_rejects(A, u_max, step):
    with pytest.raises(DomainError):
        solve_delay_dde(A, u_max, step)


def test_density_integrates_to_cdf():
    integral, _ = quad(lambda u: fixed_A_density(2.0, u), 0.0, 2.0)

    assert integral == pytest.approx(fixed_A_cdf(2.0, 2.0), rel=1e-7)


def test_law_class():
    law = FixedDeterministicLaw(1.0)

    assert str(law.spec) == "fixed:1+det"
    assert not law.symmetric
    assert law.cdf(-0.5) == 0.0
    assert law.density(0.5) == pytest.approx(EXP_MINUS_GAMMA)
    assert law.table(4.0).u_max == 4.0
    assert law.evaluate_density(0.0).value == pytest.approx(EXP_MINUS_GAMMA)

    with pytest.raises(DomainError):
        FixedDeterministicLaw(-1.0)
