import numpy as np
import pytest

from ...exceptions import DomainError
from .. import (HermitianOperator, DensityOperator, support_power, schatten_norm,
                conjugate_by, random_state, random_unitary, maximally_entangled)
from ..linalg import support_power_array


def test_support_power_identity_fixed_point():
    np.testing.assert_allclose(support_power(np.eye(2), 0.5), np.eye(2), atol=1e-14)


@pytest.mark.parametrize(('t', 'expected'), [(0.5, [2, 0]), (-1, [0.25, 0]), (0, [1, 0])])
def test_support_power_on_support_only(t, expected):
    out = support_power(np.diag([4., 0.]), t)
    np.testing.assert_allclose(out, np.diag(expected), atol=1e-14)


def test_support_power_keeps_operator_type():
    op = HermitianOperator(np.diag([4., 1.]), dims=(2,))
    out = support_power(op, 0.5)
    assert isinstance(out, HermitianOperator)
    np.testing.assert_allclose(out.matrix, np.diag([2, 1]))


def test_support_power_rejects_negative():
    with pytest.raises(DomainError) as ex:
        support_power(np.diag([1., -0.1]), 0.5)
    assert 'positive semidefinite' in str(ex.value)


def test_support_power_is_relative():
    small = support_power(np.diag([1e-20, 1e-34]), -1)
    np.testing.assert_allclose(small, np.diag([1e20, 0]))


@pytest.mark.parametrize('seed', range(5))
def test_support_power_additive(seed):
    rho = random_state(3, seed, rank=2).matrix
    rng = np.random.default_rng(seed)
    a, b = rng.uniform(-4, 4, size=2)
    lhs = support_power_array(rho, a) @ support_power_array(rho, b)
    rhs = support_power_array(rho, a + b)
    scale = max(1, np.abs(rhs).max())
    np.testing.assert_allclose(lhs, rhs, atol=1e-8 * scale)


@pytest.mark.parametrize(('matrix', 'alpha', 'expected'),
                         [(np.eye(2), 1, 2),
                          (np.diag([3., 4.]), 2, 5),
                          (np.array([[0, 1], [0, 0]]), 7, 1)])
def test_schatten_norm_values(matrix, alpha, expected):
    np.testing.assert_allclose(schatten_norm(matrix, alpha), expected)


def test_schatten_norm_rejects_nonpositive_index():
    with pytest.raises(DomainError):
        schatten_norm(np.eye(2), 0)


@pytest.mark.parametrize('seed', range(4))
def test_schatten_norm_unitarily_invariant(seed):
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    u = random_unitary(3, seed)
    v = random_unitary(3, seed + 100)
    for alpha in (0.5, 1, 2.5, np.inf):
        np.testing.assert_allclose(schatten_norm(u @ m @ v, alpha),
                                   schatten_norm(m, alpha), rtol=1e-10)
    trace_abs = np.trace(support_power_array(m.conj().T @ m, 0.5)).real
    np.testing.assert_allclose(schatten_norm(m, 1), trace_abs, rtol=1e-10)


def test_conjugate_by():
    y = HermitianOperator([[1, 1j], [-1j, 2]])
    np.testing.assert_allclose(conjugate_by(np.eye(2), y).matrix, y.matrix)
    np.testing.assert_allclose(conjugate_by(np.diag([4., 0.]), np.eye(2)), np.diag([4, 0]))


def test_conjugate_by_scales_entangled_state():
    alpha = 2
    sigma = np.eye(2) / 2
    phi = maximally_entangled(2)
    x = np.kron(np.eye(2), support_power_array(sigma, (1 - alpha) / alpha))
    out = conjugate_by(x, phi)
    np.testing.assert_allclose(out.matrix, 2 ** 0.5 * phi.matrix, atol=1e-14)


def test_density_operator_invariants():
    with pytest.raises(DomainError):
        DensityOperator(np.diag([0.5, 0.6]))
    with pytest.raises(DomainError):
        DensityOperator(np.diag([1.5, -0.5]))
    with pytest.raises(DomainError):
        HermitianOperator([[0, 1], [0, 0]])
    with pytest.raises(DomainError):
        HermitianOperator(np.eye(4), dims=(2, 3))
