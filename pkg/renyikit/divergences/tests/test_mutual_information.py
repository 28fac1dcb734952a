import numpy as np
import pytest

from ...exceptions import DomainError
from ...qmat import DensityOperator, maximally_entangled, random_state, tensor
from .. import renyi_mutual_information, petz_renyi, sandwiched_renyi


def test_product_state_has_no_correlation():
    rho_b = random_state(2, 1)
    rho = tensor(random_state(2, 0), rho_b)
    for family in ('petz', 'sandwiched'):
        report = renyi_mutual_information(rho, 2, family)
        assert report.value == pytest.approx(0, abs=1e-6)
        np.testing.assert_allclose(report.sigma_star.matrix, rho_b.matrix, atol=1e-3)


def test_maximally_entangled_at_one():
    report = renyi_mutual_information(maximally_entangled(2), 1.0)
    assert report.value == pytest.approx(2, abs=1e-10)
    np.testing.assert_allclose(report.sigma_star.matrix, np.eye(2) / 2, atol=1e-12)


def test_classically_correlated_sandwiched():
    rho = DensityOperator(np.diag([0.5, 0, 0, 0.5]), dims=(2, 2))
    report = renyi_mutual_information(rho, 2, 'sandwiched')
    assert report.value == pytest.approx(1, abs=1e-6)
    assert report.certified
    np.testing.assert_allclose(report.sigma_star.matrix, np.eye(2) / 2, atol=1e-3)


@pytest.mark.parametrize('alpha', [0.5, 1.5, 3])
def test_petz_closed_form_is_minimal(alpha):
    rho = random_state(4, 3, dims=(2, 2))
    report = renyi_mutual_information(rho, alpha, 'petz')
    rho_r = DensityOperator(np.trace(rho.matrix.reshape(2, 2, 2, 2), axis1=1, axis2=3))
    at_star = petz_renyi(rho, np.kron(rho_r.matrix, report.sigma_star.matrix), alpha)
    assert at_star == pytest.approx(report.value, abs=1e-9)
    for seed in range(10):
        other = np.kron(rho_r.matrix, random_state(2, 40 + seed).matrix)
        assert petz_renyi(rho, other, alpha) >= report.value - 1e-9


def test_sandwiched_below_petz():
    rho = random_state(4, 5, dims=(2, 2))
    sandwiched = renyi_mutual_information(rho, 2, 'sandwiched')
    petz = renyi_mutual_information(rho, 2, 'petz')
    assert sandwiched.value <= petz.value + 1e-8
    rho_r = np.trace(rho.matrix.reshape(2, 2, 2, 2), axis1=1, axis2=3)
    direct = sandwiched_renyi(rho, np.kron(rho_r, sandwiched.sigma_star.matrix), 2)
    assert direct == pytest.approx(sandwiched.value, abs=1e-8)


def test_requires_bipartite_state():
    with pytest.raises(DomainError):
        renyi_mutual_information(random_state(4, 0), 2)
    with pytest.raises(DomainError):
        renyi_mutual_information(maximally_entangled(2), 2, 'geometric')
