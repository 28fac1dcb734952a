import numpy as np
import pytest

from ...exceptions import DomainError
from ...qmat import DensityOperator, random_state
from .. import (hoeffding_divergence, hoeffding_anti_divergence, sandwiched_renyi, petz_renyi,
                relative_entropy)

ket0 = DensityOperator(np.diag([1., 0.]))
mixed = DensityOperator.maximally_mixed(2)


def test_hoeffding_identical_states():
    rho = random_state(2, 1)
    assert float(hoeffding_divergence(rho, rho, 0.3)) == pytest.approx(0, abs=1e-12)


def test_hoeffding_constant_divergence():
    assert float(hoeffding_divergence(ket0, mixed, 2)) == pytest.approx(0, abs=1e-12)
    report = hoeffding_divergence(ket0, mixed, 0.5)
    assert report.value == np.inf
    assert 'infinite' in report.flags


def test_hoeffding_decreases_with_rate():
    rho, sigma = random_state(2, 3), random_state(2, 4)
    d = float(relative_entropy(rho, sigma))
    values = [float(hoeffding_divergence(rho, sigma, r)) for r in (0.2 * d, 0.5 * d, 0.9 * d)]
    assert all(v >= 0 for v in values)
    assert np.all(np.diff(values) <= 1e-9)
    assert float(hoeffding_divergence(rho, sigma, 2 * d)) == pytest.approx(0, abs=1e-9)


@pytest.mark.parametrize('fraction', [0.1, 0.4])
def test_hoeffding_matches_dense_alpha_grid(fraction):
    rho, sigma = random_state(2, 5), random_state(2, 6)
    r = fraction * float(relative_entropy(rho, sigma))
    report = hoeffding_divergence(rho, sigma, r)
    alphas = np.linspace(0.005, 0.995, 397)
    dense = max((a - 1) / a * (r - float(petz_renyi(rho, sigma, a))) for a in alphas)
    assert report.value >= dense - 1e-7
    assert report.value <= dense + 1e-3
    assert 0 < report.alpha_star < 1
    at_star = (report.alpha_star - 1) / report.alpha_star * (
        r - float(petz_renyi(rho, sigma, report.alpha_star)))
    assert at_star == pytest.approx(report.value, abs=1e-9)


def test_hoeffding_limit_reports_alpha_one():
    rho, sigma = random_state(2, 3), random_state(2, 4)
    report = hoeffding_divergence(rho, sigma, 3 * float(relative_entropy(rho, sigma)))
    assert report.value == 0
    assert report.alpha_star == 1
    assert 'attained_at_boundary' in report.flags


def test_anti_divergence_identical_states():
    rho = random_state(3, 2)
    report = hoeffding_anti_divergence(rho, rho, 0.7)
    assert report.value == pytest.approx(0.7, abs=1e-9)
    assert report.alpha_star == np.inf
    assert 'attained_at_boundary' in report.flags


def test_anti_divergence_constant_divergence():
    assert float(hoeffding_anti_divergence(ket0, mixed, 2)) == pytest.approx(1, abs=1e-9)


def test_anti_divergence_below_threshold():
    rho, sigma = random_state(2, 5), random_state(2, 6)
    r = 0.5 * float(relative_entropy(rho, sigma))
    report = hoeffding_anti_divergence(rho, sigma, r)
    assert report.value == pytest.approx(0, abs=1e-12)


def test_anti_divergence_matches_brute_force():
    rho, sigma = random_state(2, 7), random_state(2, 8)
    r = 2 * float(relative_entropy(rho, sigma)) + 0.1
    us = np.linspace(1e-3, 1 - 1e-3, 2000)
    brute = max(u * (r - float(sandwiched_renyi(rho, sigma, 1 / (1 - u)))) for u in us)
    report = hoeffding_anti_divergence(rho, sigma, r)
    assert report.value >= brute - 1e-9
    assert report.value <= brute + 1e-4


def test_anti_divergence_without_support():
    report = hoeffding_anti_divergence(mixed, ket0, 1.0)
    assert report.value == 0
    assert 'support_condition_fails' in report.flags


def test_rate_must_be_positive():
    with pytest.raises(DomainError):
        hoeffding_divergence(ket0, mixed, 0)
    with pytest.raises(DomainError):
        hoeffding_anti_divergence(ket0, mixed, -1)
