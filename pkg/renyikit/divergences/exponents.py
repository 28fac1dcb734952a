"""
Error exponents of binary state discrimination: the Hoeffding divergence
(direct domain, Petz family) and the Hoeffding anti-divergence (strong
converse domain, sandwiched family).
"""
import numpy as np
from astropy import log

from ..config import ConfigDescriptor
from ..exceptions import DomainError
from ..optimize.chart import maximize_in_chart, alpha_from_u, u_from_alpha
from .renyi import petz_renyi, sandwiched_renyi, max_relative_entropy
from .values import ExponentReport

__all__ = ['hoeffding_divergence', 'hoeffding_anti_divergence']


def _check_rate(r):
    if not r > 0:
        raise DomainError("rate r must be positive, got {0}".format(r))


@ConfigDescriptor
def hoeffding_divergence(rho, sigma, r, chart_grid=None, chart_xatol=None, chart_lower=None):
    """
    ``H_r = sup_{0<alpha<1} (alpha-1)/alpha (r - D_alpha(rho||sigma))``.

    The supremum is ``inf`` exactly when ``r < D_0(rho||sigma)``, where
    the objective diverges as alpha -> 0.  Otherwise it is maximized over
    ``u = (alpha-1)/alpha`` in ``(u(chart_lower), 0)``, where the objective
    is concave; the u -> 0 limit (alpha -> 1) contributes the value 0.
    """
    _check_rate(r)
    d0 = float(petz_renyi(rho, sigma, 0.0))
    if r < d0:
        return ExponentReport(np.inf, alpha_star=0.0, flags={'infinite', 'attained_at_boundary'},
                              extra=dict(r=r, d0=d0))

    def objective(u):
        return u * (r - float(petz_renyi(rho, sigma, alpha_from_u(u))))

    best = maximize_in_chart(objective, lower=u_from_alpha(chart_lower), upper=-chart_lower,
                             chart_grid=chart_grid, chart_xatol=chart_xatol,
                             endpoints={0.0: 0.0})
    flags = {'attained_at_boundary'} if best.at_boundary else set()
    value = max(best.value, 0.0)
    log.debug("Hoeffding divergence at r={0}: {1:.12g} (u*={2:.6g})"
              .format(r, value, best.argmax))
    return ExponentReport(value, alpha_star=alpha_from_u(best.argmax),
                          iterations=best.evaluations, tolerance=chart_xatol, flags=flags,
                          extra=dict(r=r, d0=d0))


@ConfigDescriptor
def hoeffding_anti_divergence(rho, sigma, r, chart_grid=None, chart_xatol=None):
    """
    ``H*_r = sup_{alpha>1} (alpha-1)/alpha (r - D~_alpha(rho||sigma))``.

    Maximized over ``u = (alpha-1)/alpha`` in (0, 1), where the objective
    is concave.  The limits u -> 0 (value 0) and u -> 1
    (``r - D_max``) are included, so a supremum reached only in a limit is
    still returned; ``alpha_star`` is then ``1`` or ``inf``.
    """
    _check_rate(r)
    d_max = float(max_relative_entropy(rho, sigma))
    if np.isinf(d_max):
        # supp(rho) not in supp(sigma): every alpha > 1 term is -inf
        return ExponentReport(0.0, alpha_star=1.0,
                              flags={'support_condition_fails', 'attained_at_boundary'},
                              extra=dict(r=r))

    def objective(u):
        return u * (r - float(sandwiched_renyi(rho, sigma, alpha_from_u(u))))

    best = maximize_in_chart(objective, chart_grid=chart_grid, chart_xatol=chart_xatol,
                             endpoints={0.0: 0.0, 1.0: r - d_max})
    flags = {'attained_at_boundary'} if best.at_boundary else set()
    log.debug("Hoeffding anti-divergence at r={0}: {1:.12g} (u*={2:.6g})"
              .format(r, best.value, best.argmax))
    return ExponentReport(max(best.value, 0.0), alpha_star=alpha_from_u(best.argmax),
                          iterations=best.evaluations, tolerance=chart_xatol, flags=flags,
                          extra=dict(r=r, d_max=d_max))
