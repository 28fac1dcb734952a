"""
Local search over density matrices and pure states.

States are parameterized without constraints: rho = G G^dagger / Tr(G G^dagger)
for a complex matrix G, or |v><v| / <v|v> for a complex vector v.  Searches
use BFGS from ``scipy.optimize`` with central finite-difference gradients
and are restarted from several deterministic seeds.
"""
from collections import namedtuple

import numpy as np
from scipy import optimize
from astropy import log

from ..config import ConfigDescriptor
from ..qmat.linalg import support_power_array
from ..qmat.sampling import rng_for

__all__ = ['StateOptimum', 'params_to_density', 'density_to_params', 'params_to_pure',
           'pure_to_params', 'central_gradient', 'optimize_state', 'sup_inf_states',
           'inf_sup_states']

StateOptimum = namedtuple('StateOptimum', ['value', 'state', 'iterations', 'seed',
                                           'witness'])

# objective values standing in for +-inf so line searches can back off
_PENALTY = 1e10


def params_to_density(x, d):
    n = d * d
    g = (x[:n] + 1j * x[n:]).reshape(d, d)
    m = g @ g.conj().T
    return m / np.trace(m).real


def density_to_params(rho):
    g = support_power_array(np.asarray(rho, dtype=complex), 0.5, check=False)
    return np.concatenate([g.real.ravel(), g.imag.ravel()])


def params_to_pure(x, d):
    v = x[:d] + 1j * x[d:]
    return np.outer(v, v.conj()) / np.vdot(v, v).real


def pure_to_params(vector):
    v = np.asarray(vector, dtype=complex).ravel()
    return np.concatenate([v.real, v.imag])


def central_gradient(func, x, step):
    grad = np.empty_like(x)
    shift = np.zeros_like(x)
    for i in range(x.size):
        shift[i] = step
        grad[i] = (func(x + shift) - func(x - shift)) / (2 * step)
        shift[i] = 0
    return grad


def _charts(pure):
    if pure:
        return params_to_pure, pure_to_params, (lambda d: 2 * d)
    return params_to_density, density_to_params, (lambda d: 2 * d * d)


def _starting_points(dim, starts, seeds, pure):
    _, to_params, size = _charts(pure)
    points = []
    for k, start in enumerate(starts):
        if start is not None:
            points.append(('start{0}'.format(k), to_params(np.asarray(start))))
    for seed in seeds:
        rng = rng_for(seed, 7919)
        points.append((int(seed), rng.standard_normal(size(dim))))
    return points


def _guarded(func, sign):
    def wrapped(x):
        value = func(x)
        if not np.isfinite(value):
            return _PENALTY if sign * value > 0 or np.isnan(value) else -_PENALTY
        return sign * value
    return wrapped


def _descend(fun, jac, x0, gtol, maxiter):
    result = optimize.minimize(fun, x0, jac=jac, method='BFGS',
                               options=dict(gtol=gtol, maxiter=int(maxiter)))
    return result.x, result.fun, result.nit


@ConfigDescriptor
def optimize_state(objective, dim, maximize=True, starts=(), seeds=None, pure=False,
                   gtol=None, maxiter=None, fd_step=None, multistart_seeds=None):
    """
    Multi-start local optimization of ``objective`` over states.

    Parameters
    ----------
    objective : callable
        Maps a ``(dim, dim)`` density matrix to a real number.
    dim : int
        Hilbert space dimension (for ``pure=True``, the vector length).
    maximize : bool
    starts : sequence of array_like
        Initial states tried before the seeded random ones; ``None``
        entries are skipped.
    seeds : iterable of int, optional
        Defaults to ``range(multistart_seeds)``.
    pure : bool
        Search over pure states instead of mixed ones.

    Returns
    -------
    StateOptimum
        ``seed`` is the start that won (an int seed or ``'startK'``).
    """
    if seeds is None:
        seeds = range(int(multistart_seeds))
    to_state = _charts(pure)[0]
    sign = -1.0 if maximize else 1.0
    fun = _guarded(lambda x: objective(to_state(x, dim)), sign)

    def jac(x):
        return central_gradient(fun, x, fd_step)

    best = None
    total = 0
    for label, x0 in _starting_points(dim, starts, seeds, pure):
        x, value, nit = _descend(fun, jac, x0, gtol, maxiter)
        total += nit
        log.debug("state search start {0}: value {1:.12g} after {2} iterations"
                  .format(label, sign * value, nit))
        if best is None or value < best[1]:
            best = (x, value, label)
    state = to_state(best[0], dim)
    return StateOptimum(float(objective(state)), state, total, best[2], None)


def _minimax(objective, inner, dim, sign, starts, seeds, gtol, maxiter, fd_step):
    cache = {}
    last = {'witness': None}

    def solve(x):
        key = x.tobytes()
        if key not in cache:
            if len(cache) > 4096:
                cache.clear()
            value, witness = inner(params_to_density(x, dim), last['witness'])
            last['witness'] = witness
            cache[key] = (value, witness)
        return cache[key]

    def fun(x):
        value = solve(x)[0]
        if not np.isfinite(value):
            return _PENALTY
        return sign * value

    def jac(x):
        witness = solve(x)[1]
        return central_gradient(
            _guarded(lambda y: objective(params_to_density(y, dim), witness), sign),
            x, fd_step)

    best = None
    total = 0
    for label, x0 in _starting_points(dim, starts, seeds, False):
        last['witness'] = None
        x, value, nit = _descend(fun, jac, x0, gtol, maxiter)
        total += nit
        log.debug("minimax start {0}: value {1:.12g} after {2} iterations"
                  .format(label, sign * value, nit))
        if best is None or value < best[1]:
            best = (x, value, label)
    state = params_to_density(best[0], dim)
    value, witness = inner(state, solve(best[0])[1])
    return StateOptimum(float(value), state, total, best[2], witness)


@ConfigDescriptor
def sup_inf_states(objective, inner, dim, starts=(), seeds=None, gtol=None,
                   maxiter=None, fd_step=None, minimax_seeds=None):
    """
    Maximize ``min_w objective(rho, w)`` over states rho.

    ``inner(rho, warm)`` solves the inner problem and returns
    ``(value, w_star)``; ``warm`` is the previous witness or ``None``.  The
    outer gradient is the partial gradient of ``objective`` at the inner
    optimum (Danskin), so the inner problem is solved once per outer
    point.  ``StateOptimum.witness`` holds the final ``w_star``.
    """
    if seeds is None:
        seeds = range(int(minimax_seeds))
    return _minimax(objective, inner, dim, -1.0, starts, seeds, gtol, maxiter, fd_step)


@ConfigDescriptor
def inf_sup_states(objective, inner, dim, starts=(), seeds=None, gtol=None,
                   maxiter=None, fd_step=None, minimax_seeds=None):
    """
    Minimize ``max_w objective(rho, w)`` over states rho; see
    `sup_inf_states`.
    """
    if seeds is None:
        seeds = range(int(minimax_seeds))
    return _minimax(objective, inner, dim, 1.0, starts, seeds, gtol, maxiter, fd_step)
