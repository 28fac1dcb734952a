import numpy as np
import pytest

from ...exceptions import DomainError
from ...divergences import hypothesis_testing
from .. import classical_iid_stein, compositions

canonical_p = [0.5, 0.5]
canonical_q = [0.25, 0.75]
canonical_d = 0.5 * np.log2(2) + 0.5 * np.log2(2 / 3)


def test_compositions():
    counts = compositions(3, 3)
    assert len(counts) == 10
    assert np.all(counts.sum(axis=1) == 3)
    assert len({tuple(c) for c in counts}) == 10


def test_identical_distributions():
    beta, rate = classical_iid_stein([0.2, 0.3, 0.5], [0.2, 0.3, 0.5], 7, 0.25)
    assert beta == pytest.approx(0.75, abs=1e-12)
    assert rate == pytest.approx(-np.log2(0.75) / 7, abs=1e-12)


def test_single_copy_matches_quantum_test():
    beta, rate = classical_iid_stein(canonical_p, canonical_q, 1, 0.5)
    assert beta == pytest.approx(0.25, abs=1e-12)
    quantum = hypothesis_testing(np.diag(canonical_p), np.diag(canonical_q), 0.5)
    assert quantum.achieved_type2 == pytest.approx(beta, abs=1e-9)


def test_rate_approaches_relative_entropy():
    _, rate_1000 = classical_iid_stein(canonical_p, canonical_q, 1000, 0.1)
    _, rate_4000 = classical_iid_stein(canonical_p, canonical_q, 4000, 0.1)
    assert abs(rate_1000 - canonical_d) < 0.05
    assert abs(rate_4000 - canonical_d) < abs(rate_1000 - canonical_d)


def test_large_n_does_not_underflow():
    beta, rate = classical_iid_stein(canonical_p, canonical_q, 100000, 0.1)
    assert beta == 0
    assert abs(rate - canonical_d) < 0.01


def test_disjoint_support():
    beta, rate = classical_iid_stein([1, 0], [0, 1], 5, 0)
    assert beta == 0
    assert rate == np.inf


def test_invalid_input():
    with pytest.raises(DomainError):
        classical_iid_stein([0.5, 0.5], [0.2, 0.3, 0.5], 3, 0.1)
    with pytest.raises(DomainError):
        classical_iid_stein([0.5, 0.6], [0.5, 0.5], 3, 0.1)
    with pytest.raises(DomainError):
        classical_iid_stein([0.5, 0.5], [0.5, 0.5], 3, 1.0)
