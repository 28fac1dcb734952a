"""
Exhaustive search over qubit states on a Bloch-ball grid.
"""
from collections import namedtuple

import numpy as np

from ..config import ConfigDescriptor
from ..qmat.channels import PAULIS

_SIGMAS = np.stack([PAULIS['X'], PAULIS['Y'], PAULIS['Z']])

__all__ = ['bloch_grid', 'bloch_state', 'bloch_states', 'GridOptimum', 'grid_search']

GridOptimum = namedtuple('GridOptimum', ['value', 'state', 'evaluations'])


def bloch_grid(resolution):
    """Points of the cube grid ``linspace(-1, 1, resolution)**3`` inside the open unit ball."""
    c = np.linspace(-1, 1, int(resolution))
    x, y, z = np.meshgrid(c, c, c, indexing='ij')
    points = np.stack([x.ravel(), y.ravel(), z.ravel()], axis=-1)
    return points[np.linalg.norm(points, axis=-1) < 1 - 1e-12]


def bloch_states(points):
    """Stack of density matrices (I + r.sigma)/2 for Bloch vectors ``points``."""
    points = np.atleast_2d(points)
    return 0.5 * (PAULIS['I'] + np.einsum('nk,kij->nij', points, _SIGMAS))


def bloch_state(vector):
    return bloch_states(vector)[0]


@ConfigDescriptor
def grid_search(batched_objective, maximize=True, grid_resolution=None, chunk=4096):
    """
    Evaluate ``batched_objective`` on every Bloch-grid state.

    ``batched_objective`` maps an ``(n, 2, 2)`` stack to ``n`` values.
    Non-finite values are kept: an ``inf`` maximum is a legitimate answer.
    """
    points = bloch_grid(grid_resolution)
    values = np.empty(len(points))
    for start in range(0, len(points), chunk):
        states = bloch_states(points[start:start + chunk])
        values[start:start + chunk] = np.asarray(batched_objective(states), dtype=float)
    values = np.where(np.isnan(values), -np.inf if maximize else np.inf, values)
    k = int(np.argmax(values) if maximize else np.argmin(values))
    return GridOptimum(float(values[k]), bloch_state(points[k]), len(points))
