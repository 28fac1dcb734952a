import numpy as np
import pytest

from ..bloch import bloch_grid, bloch_states, grid_search


def test_grid_points_inside_ball():
    points = bloch_grid(9)
    assert np.all(np.linalg.norm(points, axis=-1) < 1)
    states = bloch_states(points)
    np.testing.assert_allclose(np.trace(states, axis1=-2, axis2=-1), 1)
    assert np.all(np.linalg.eigvalsh(states) >= -1e-12)


def test_grid_search_finds_purest_state():
    def purity(stack):
        return np.einsum('nij,nji->n', stack, stack).real

    best = grid_search(purity, maximize=True, grid_resolution=11)
    worst = grid_search(purity, maximize=False, grid_resolution=11)
    assert best.value > 0.9
    assert worst.value == pytest.approx(0.5)
    np.testing.assert_allclose(worst.state, np.eye(2) / 2, atol=1e-12)
