import numpy as np
import pytest

from ..chart import maximize_in_chart, alpha_from_u, u_from_alpha


def test_chart_round_trip_at_special_orders():
    assert alpha_from_u(0) == 1
    assert alpha_from_u(1) == np.inf
    assert u_from_alpha(np.inf) == 1
    assert u_from_alpha(2) == 0.5


@pytest.mark.parametrize('grid', [0, 16])
def test_interior_maximum(grid):
    best = maximize_in_chart(lambda u: -(u - 0.3) ** 2, chart_grid=grid)
    assert best.argmax == pytest.approx(0.3, abs=1e-5)
    assert best.value == pytest.approx(0, abs=1e-9)
    assert not best.at_boundary


def test_endpoint_limit_wins():
    best = maximize_in_chart(lambda u: u, chart_grid=0, endpoints={0.0: 0.0, 1.0: 1.0})
    assert best.argmax == 1.0
    assert best.value == 1.0
    assert best.at_boundary


def test_nan_treated_as_minus_infinity():
    best = maximize_in_chart(lambda u: np.nan if u < 0.5 else 1 - u, chart_grid=16)
    assert best.argmax >= 0.5
    assert np.isfinite(best.value)


def test_infinite_value():
    best = maximize_in_chart(lambda u: np.inf, chart_grid=4)
    assert best.value == np.inf
