import numpy as np
import pytest

from ...exceptions import DomainError
from ...qmat import (DensityOperator, PureState, apply_channel, random_state,
                     random_channel)
from .. import (relative_entropy, petz_renyi, sandwiched_renyi, max_relative_entropy,
                renyi_auto, DivergenceValue)

half = DensityOperator(np.diag([0.5, 0.5]))
skew = DensityOperator(np.diag([0.25, 0.75]))
ket0 = DensityOperator(np.diag([1., 0.]))
ket1 = DensityOperator(np.diag([0., 1.]))
plus = PureState(np.array([1, 1]) / np.sqrt(2)).projector()


def _pairs(n, d=2):
    for seed in range(n):
        yield random_state(d, 2 * seed), random_state(d, 2 * seed + 1)


def test_relative_entropy_values():
    assert relative_entropy(half, half) == pytest.approx(0, abs=1e-14)
    assert relative_entropy(half, skew) == pytest.approx(0.5 + 0.5 * np.log2(2 / 3), abs=1e-12)
    value = relative_entropy(ket0, ket1)
    assert isinstance(value, DivergenceValue)
    assert not value.finite


def test_dimension_mismatch():
    with pytest.raises(DomainError):
        relative_entropy(half, random_state(3, 0))


def test_petz_values():
    assert petz_renyi(half, skew, 2) == pytest.approx(np.log2(4 / 3), abs=1e-12)
    assert petz_renyi(ket0, ket1, 0.5) == np.inf
    rho = random_state(3, 1)
    assert petz_renyi(rho, rho, 3) == pytest.approx(0, abs=1e-10)
    with pytest.raises(DomainError):
        petz_renyi(half, skew, 1)


def test_sandwiched_values():
    rho = random_state(2, 5)
    assert sandwiched_renyi(rho, rho, 2) == pytest.approx(0, abs=1e-10)
    assert sandwiched_renyi(half, skew, 2) == pytest.approx(np.log2(4 / 3), abs=1e-12)
    assert sandwiched_renyi(ket0, plus, 0.5) == pytest.approx(1, abs=1e-10)
    with pytest.raises(DomainError):
        sandwiched_renyi(half, skew, 1)


def test_support_rules():
    # rho outside the support of sigma: infinite above one, finite below
    assert sandwiched_renyi(half, ket0, 2) == np.inf
    assert relative_entropy(half, ket0) == np.inf
    assert np.isfinite(petz_renyi(half, ket0, 0.5))
    assert sandwiched_renyi(ket0, ket1, 0.5) == np.inf


def test_support_uses_projectors_not_weights():
    # a weight far below support_tol still puts rho outside supp(ket0)
    tiny = DensityOperator(np.diag([1 - 1e-11, 1e-11]))
    assert relative_entropy(tiny, ket0) == np.inf
    assert sandwiched_renyi(tiny, ket0, 1.5) == np.inf
    assert petz_renyi(tiny, ket0, 2) == np.inf
    assert np.isfinite(petz_renyi(tiny, ket0, 0.5))
    inside = DensityOperator(np.diag([1., 1e-14]))
    assert relative_entropy(inside, ket0) == pytest.approx(0, abs=1e-9)


def test_subnormalized_first_argument():
    rho = random_state(2, 3).matrix
    sigma = random_state(2, 4)
    full = sandwiched_renyi(rho, sigma, 2)
    assert sandwiched_renyi(0.5 * rho, sigma, 2) == pytest.approx(full - 1, abs=1e-10)
    assert petz_renyi(0.5 * rho, sigma, 2) == pytest.approx(
        float(petz_renyi(rho, sigma, 2)) - 1, abs=1e-10)


def test_max_relative_entropy():
    assert max_relative_entropy(half, skew) == pytest.approx(1, abs=1e-12)


@pytest.mark.parametrize('alpha', [0.5, 0.9, 1.5, 2, 5])
def test_sandwiched_data_processing(alpha):
    for seed, (rho, sigma) in enumerate(_pairs(6)):
        ch = random_channel(2, 2, seed=seed)
        before = sandwiched_renyi(rho, sigma, alpha)
        after = sandwiched_renyi(apply_channel(ch, rho), apply_channel(ch, sigma), alpha)
        assert after <= before + 1e-8


@pytest.mark.parametrize('alpha', [0.25, 0.5, 1.5, 2])
def test_petz_data_processing(alpha):
    for seed, (rho, sigma) in enumerate(_pairs(6)):
        ch = random_channel(2, 3, seed=seed)
        before = petz_renyi(rho, sigma, alpha)
        after = petz_renyi(apply_channel(ch, rho), apply_channel(ch, sigma), alpha)
        assert after <= before + 1e-8


def test_monotone_in_alpha_and_ordered():
    alphas = [0.2, 0.5, 0.8, 0.99, 1.01, 1.5, 2, 3, 6]
    for rho, sigma in _pairs(5, d=3):
        petz = [float(petz_renyi(rho, sigma, a)) for a in alphas]
        sand = [float(sandwiched_renyi(rho, sigma, a)) for a in alphas]
        assert np.all(np.diff(petz) >= -1e-9)
        assert np.all(np.diff(sand) >= -1e-9)
        assert np.all(np.array(sand) <= np.array(petz) + 1e-9)


@pytest.mark.parametrize('family', ['petz', 'sandwiched'])
def test_limit_at_one(family):
    for rho, sigma in _pairs(5):
        d = float(relative_entropy(rho, sigma))
        for alpha in (1 - 1e-3, 1 + 1e-3):
            assert abs(renyi_auto(rho, sigma, alpha, family) - d) <= 5e-3
        assert renyi_auto(rho, sigma, 1.0, family) == d


def test_renyi_auto_rejects_family():
    with pytest.raises(DomainError):
        renyi_auto(half, skew, 2, family='geometric')


@pytest.mark.parametrize('alpha', [0.3, 0.7, 1.5, 4])
def test_trace_and_norm_forms_agree(alpha):
    for rho, sigma in _pairs(4, d=3):
        trace = sandwiched_renyi(rho, sigma, alpha, method='trace')
        norm = sandwiched_renyi(rho, sigma, alpha, method='norm')
        assert trace == pytest.approx(norm, abs=1e-10)
