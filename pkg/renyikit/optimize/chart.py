"""
One-dimensional maximization in the chart ``u = (alpha - 1)/alpha``.

Exponents of the form ``sup_alpha (alpha-1)/alpha (r - D_alpha)`` become
``sup_u u (r - D_{1/(1-u)})``, which is concave in ``u`` for the sandwiched
family.  `maximize_in_chart` combines a coarse grid with bounded Brent
refinement and reports when the optimum sits on the boundary of the
search interval.
"""
from collections import namedtuple

import numpy as np
from scipy import optimize

from ..config import ConfigDescriptor

__all__ = ['ChartOptimum', 'alpha_from_u', 'u_from_alpha', 'maximize_in_chart']

ChartOptimum = namedtuple('ChartOptimum', ['value', 'argmax', 'at_boundary', 'evaluations'])


def alpha_from_u(u):
    if u >= 1:
        return np.inf
    return 1.0 / (1.0 - u)


def u_from_alpha(alpha):
    if np.isinf(alpha):
        return 1.0
    return (alpha - 1.0) / alpha


def _finite_or_floor(value):
    value = float(value)
    return -np.inf if np.isnan(value) else value


@ConfigDescriptor
def maximize_in_chart(func, lower=None, upper=None, chart_grid=None, chart_xatol=None,
                      endpoints=None, chart_lower=None, chart_upper=None):
    """
    Maximize ``func`` on ``[lower, upper]``.

    Parameters
    ----------
    func : callable
        Scalar function of ``u``; may return ``inf`` or ``-inf``.
    lower, upper : float
        Search interval, by default ``chart_lower`` and ``chart_upper``.
    chart_grid : int
        Number of grid points.  ``0`` skips the grid and runs bounded Brent
        over the whole interval, evaluating both ends separately; this is
        the mode for expensive objectives.
    endpoints : dict, optional
        Limit values ``{u: value}`` at points outside the open interval,
        such as ``{1.0: r - D_max}``.  A limit that is at least the
        interior optimum wins and is reported as a boundary optimum.

    Returns
    -------
    ChartOptimum
    """
    if lower is None:
        lower = chart_lower
    if upper is None:
        upper = chart_upper
    evaluations = [0]

    def f(u):
        evaluations[0] += 1
        return _finite_or_floor(func(u))

    if chart_grid:
        xs = np.linspace(lower, upper, int(chart_grid))
        values = np.array([f(u) for u in xs])
        k = int(np.argmax(values))
        best = (values[k], xs[k])
        if np.isinf(best[0]) and best[0] > 0:
            return ChartOptimum(np.inf, float(xs[k]), k in (0, len(xs) - 1), evaluations[0])
        bracket = (xs[max(k - 1, 0)], xs[min(k + 1, len(xs) - 1)])
    else:
        best = max((f(lower), lower), (f(upper), upper))
        if np.isinf(best[0]) and best[0] > 0:
            return ChartOptimum(np.inf, float(best[1]), True, evaluations[0])
        bracket = (lower, upper)

    if bracket[1] > bracket[0]:
        res = optimize.minimize_scalar(lambda u: -f(u), bounds=bracket, method='bounded',
                                       options=dict(xatol=chart_xatol))
        if -res.fun > best[0]:
            best = (-res.fun, res.x)
    value, argmax = float(best[0]), float(best[1])
    at_boundary = (argmax - lower <= 10 * chart_xatol) or (upper - argmax <= 10 * chart_xatol)
    for position, limit in sorted((endpoints or {}).items()):
        if limit >= value:
            value, argmax, at_boundary = float(limit), float(position), True
    return ChartOptimum(value, argmax, at_boundary, evaluations[0])
