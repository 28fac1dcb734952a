import numpy as np
import pytest

from ...exceptions import DomainError
from .. import (DensityOperator, HermitianOperator, tensor, partial_trace,
                gamma_vector, gamma_projector, maximally_entangled, random_state,
                support_power)


class TestPartialTrace(object):

    def setup_method(self, method):
        self.rho_a = random_state(2, 1)
        self.sigma_b = random_state(3, 2)

    def test_product_state(self):
        joint = tensor(self.rho_a, self.sigma_b)
        assert joint.dims == (2, 3)
        np.testing.assert_allclose(partial_trace(joint, 0).matrix, self.rho_a.matrix,
                                   atol=1e-12)
        np.testing.assert_allclose(partial_trace(joint, [1]).matrix, self.sigma_b.matrix,
                                   atol=1e-12)

    def test_unnormalized_factor(self):
        b = HermitianOperator(np.diag([1., 2., 3.]))
        joint = tensor(self.rho_a, b)
        np.testing.assert_allclose(partial_trace(joint, 0).matrix,
                                   6 * self.rho_a.matrix, atol=1e-12)

    def test_maximally_entangled_marginal(self):
        np.testing.assert_allclose(partial_trace(maximally_entangled(2), 0).matrix,
                                   np.eye(2) / 2, atol=1e-15)

    def test_against_index_sum(self):
        rho = random_state(6, 7, dims=(2, 3))
        reduced = partial_trace(rho, 1)
        t = rho.matrix.reshape(2, 3, 2, 3)
        oracle = sum(t[i, :, i, :] for i in range(2))
        np.testing.assert_allclose(reduced.matrix, oracle, atol=1e-14)
        np.testing.assert_allclose(reduced.trace(), 1, atol=1e-12)

    def test_middle_subsystem(self):
        rhos = [random_state(d, 10 + d) for d in (2, 3, 2)]
        joint = tensor(*rhos)
        np.testing.assert_allclose(partial_trace(joint, [0, 2]).matrix,
                                   np.kron(rhos[0].matrix, rhos[2].matrix), atol=1e-12)

    def test_bad_index(self):
        with pytest.raises(DomainError):
            partial_trace(tensor(self.rho_a, self.sigma_b), 2)


def test_gamma_small_dimensions():
    np.testing.assert_allclose(gamma_projector(1).matrix, [[1]])
    assert gamma_projector(2).trace() == 2
    assert not gamma_vector(2).normalized


def test_gamma_conjugated_by_root_of_mixed_state():
    root = support_power(np.eye(2) / 2, 0.5)
    big = np.kron(root, np.eye(2))
    state = big @ gamma_projector(2).matrix @ big
    np.testing.assert_allclose(state, maximally_entangled(2).matrix, atol=1e-15)


@pytest.mark.parametrize('seed', range(3))
def test_gamma_vectorization(seed):
    rng = np.random.default_rng(seed)
    a, b = (rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)) for _ in range(2))
    g = gamma_vector(3).amplitudes
    lhs = g.conj() @ np.kron(a.conj().T @ b, np.eye(3)) @ g
    np.testing.assert_allclose(lhs, np.trace(a.conj().T @ b), atol=1e-10)


def test_tensor_of_states_is_state():
    assert isinstance(tensor(random_state(2, 0), random_state(2, 1)), DensityOperator)
