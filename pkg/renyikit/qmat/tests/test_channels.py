import numpy as np
import pytest

from ...exceptions import DomainError
from .. import (DensityOperator, KrausChannel, KrausMap, ReplacerSpec, apply_channel,
                identity_channel, dephasing_channel, depolarizing_channel,
                amplitude_damping_channel, replacer_channel, illumination_toy,
                maximally_entangled, gamma_projector, random_state, random_pure,
                random_channel, random_povm, tensor)


def test_identity_channel():
    rho = random_state(3, 4)
    np.testing.assert_allclose(apply_channel(identity_channel(3), rho).matrix, rho.matrix)


def test_replacer_discards_input():
    sigma = random_state(2, 8)
    out = apply_channel(replacer_channel(sigma, 3), random_state(3, 9))
    np.testing.assert_allclose(out.matrix, sigma.matrix, atol=1e-14)
    assert ReplacerSpec(sigma).channel(3).dim_in == 3


def test_dephasing_on_half_of_entangled_state():
    out = apply_channel(dephasing_channel(1), maximally_entangled(2), acting_on=1)
    np.testing.assert_allclose(out.matrix, np.diag([0.5, 0, 0, 0.5]), atol=1e-15)
    # Choi-contraction oracle: (id x D)(Gamma)/2
    np.testing.assert_allclose(out.matrix, dephasing_channel(1).choi() / 2, atol=1e-15)


def test_choi_matches_channel_on_gamma():
    ch = random_channel(2, 3, seed=5)
    direct = apply_channel(ch, gamma_projector(2), acting_on=1)
    np.testing.assert_allclose(ch.choi(), direct.matrix, atol=1e-13)
    assert direct.dims == (2, 3)


@pytest.mark.parametrize('seed', range(4))
def test_random_channel_preserves_trace(seed):
    ch = random_channel(2, 2, seed=seed, kraus_count=3)
    assert ch.trace_preserving_residual() <= 1e-9
    rho = tensor(random_state(3, seed), random_state(2, seed + 1))
    out = apply_channel(ch, rho, acting_on=1)
    np.testing.assert_allclose(out.trace(), 1, atol=1e-9)
    assert isinstance(out, DensityOperator)


def test_block_application_and_labels():
    ch = random_channel(4, 2, seed=1, dims_in=(2, 2))
    rho = tensor(random_state(2, 1), random_state(2, 2), random_state(3, 3))
    out = apply_channel(ch, rho, acting_on=(0, 1))
    assert out.dims == (2, 3)
    with pytest.raises(DomainError):
        apply_channel(ch, rho, acting_on=(0, 2))
    with pytest.raises(DomainError):
        apply_channel(ch, rho, acting_on=2)


def test_not_trace_preserving():
    with pytest.raises(DomainError):
        KrausChannel([np.eye(2), np.eye(2)])
    half = KrausMap([np.eye(2) / 2])
    assert half.trace_preserving_residual() > 0.5


def test_conjugated_map():
    sigma = np.diag([0.25, 0.75])
    theta = identity_channel(2).conjugated(sigma)
    np.testing.assert_allclose(theta.kraus[0], np.diag([0.5, np.sqrt(0.75)]))


@pytest.mark.parametrize('p', [0, 0.3, 1])
def test_depolarizing_and_damping(p):
    rho = random_state(2, 2)
    out = depolarizing_channel(p)(rho)
    np.testing.assert_allclose(out.matrix, (1 - p) * rho.matrix + p * np.eye(2) / 2,
                               atol=1e-14)
    damped = amplitude_damping_channel(1)(rho)
    np.testing.assert_allclose(damped.matrix, np.diag([1, 0]), atol=1e-14)


def test_illumination_toy_degenerates_to_identity():
    ch, replacer = illumination_toy(1, 0)
    rho = random_state(2, 11)
    np.testing.assert_allclose(ch(rho).matrix, rho.matrix, atol=1e-14)
    np.testing.assert_allclose(replacer.sigma.matrix, np.diag([1, 0]))


def test_sampling_is_seeded():
    np.testing.assert_array_equal(random_state(3, 5).matrix, random_state(3, 5).matrix)
    np.testing.assert_array_equal(random_pure(3, 5).amplitudes, random_pure(3, 5).amplitudes)
    np.testing.assert_array_equal(random_channel(2, 2, seed=5).kraus,
                                  random_channel(2, 2, seed=5).kraus)
    assert not np.allclose(random_state(3, 5).matrix, random_state(3, 6).matrix)


def test_random_channel_argument_order():
    ch = random_channel(2, 2, 3, 7)
    assert ch.kraus.shape == (3, 2, 2)
    np.testing.assert_array_equal(ch.kraus, random_channel(2, 2, kraus_count=3, seed=7).kraus)
    with pytest.raises(DomainError):
        random_channel(2, 2, 3)


def test_random_povm_sums_to_identity():
    povm = random_povm(4, 3, 0)
    np.testing.assert_allclose(sum(povm), np.eye(4), atol=1e-12)
    assert all(np.linalg.eigvalsh(e).min() > -1e-12 for e in povm)
