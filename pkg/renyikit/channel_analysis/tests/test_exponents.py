import numpy as np
import pytest

from ...exceptions import DomainError
from ...qmat import (ReplacerSpec, identity_channel, replacer_channel, random_channel,
                     random_state)
from .. import (stein_exponent, strong_converse_exponent, feedback_sc_exponent,
                composite_sc_bounds)

quick = dict(seeds=range(2))
sigma0 = np.diag([0.3, 0.7])


def test_stein_exponent_is_relative_entropy():
    report = stein_exponent(identity_channel(2), np.eye(2) / 2, **quick)
    assert report.value == pytest.approx(2, abs=1e-6)
    assert report.extra['quantity'] == 'stein_exponent'


def test_strong_converse_matching_replacer():
    report = strong_converse_exponent(replacer_channel(sigma0, 2), sigma0, 0.5, **quick)
    assert report.value == pytest.approx(0.5, abs=1e-6)
    assert report.alpha_star == np.inf
    assert report.gap_certificate <= 1e-4


def test_strong_converse_identity():
    report = strong_converse_exponent(identity_channel(2), np.eye(2) / 2, 3, **quick)
    assert report.value == pytest.approx(1, abs=1e-6)
    below = strong_converse_exponent(identity_channel(2), np.eye(2) / 2, 1.5, **quick)
    assert below.value == 0
    assert 'below_threshold' in below.flags


def test_strong_converse_support_failure():
    report = strong_converse_exponent(identity_channel(2), np.diag([1., 0.]), 1)
    assert report.value == np.inf
    assert 'support_condition_fails' in report.flags


def test_strong_converse_grows_slower_than_rate():
    ch = random_channel(2, 2, seed=5)
    sigma = ReplacerSpec(random_state(2, 6))
    d = stein_exponent(ch, sigma, **quick).value
    rates = [d + 0.2, d + 0.5, d + 1.0]
    values = [strong_converse_exponent(ch, sigma, r, minimax=False, **quick).value
              for r in rates]
    assert np.all(np.diff(values) >= -1e-6)
    assert np.all(np.diff(values) <= np.diff(rates) + 1e-6)


def test_strong_converse_minimax_gap():
    ch = random_channel(2, 2, seed=9)
    sigma = ReplacerSpec(random_state(2, 10))
    d = stein_exponent(ch, sigma, **quick).value
    report = strong_converse_exponent(ch, sigma, d + 0.5, **quick)
    assert abs(report.extra['inf_sup'] - report.extra['sup_inf']) <= 1e-4


@pytest.mark.parametrize(('channel', 'rate', 'expected'),
                         [(replacer_channel(sigma0, 2), 0.7, 0.7),
                          (identity_channel(2), 3, 1),
                          (identity_channel(2), 1.5, 0)])
def test_feedback_exponent(channel, rate, expected):
    report = feedback_sc_exponent(channel, rate, **quick)
    assert report.value == pytest.approx(expected, abs=1e-4)


def test_rates_must_be_positive():
    with pytest.raises(DomainError):
        feedback_sc_exponent(identity_channel(2), 0)
    with pytest.raises(DomainError):
        strong_converse_exponent(identity_channel(2), np.eye(2) / 2, -1)


def test_composite_bounds():
    bounds = composite_sc_bounds(replacer_channel(sigma0, 2), 0.4, composite_samples=2, **quick)
    assert bounds.lower.value == pytest.approx(0.4, abs=1e-4)
    assert bounds.upper.value == pytest.approx(0.4, abs=1e-4)
    bounds = composite_sc_bounds(identity_channel(2), 3, composite_samples=2, **quick)
    assert bounds.lower.value >= 1 - 1e-4
    assert bounds.lower.value <= bounds.upper.value
    below = composite_sc_bounds(identity_channel(2), 1, composite_samples=1, **quick)
    assert below.lower.value == 0
