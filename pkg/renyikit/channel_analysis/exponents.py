"""
Exponents of adaptive channel discrimination and of feedback-assisted
communication.

Every strong converse quantity here has the shape
``sup_{alpha>1} (alpha-1)/alpha (r - F(alpha))`` for a non-decreasing
``F``; it is maximized in the chart ``u = (alpha-1)/alpha`` by bounded
Brent search with warm-started inner optimizations, then re-evaluated with
full certification at the optimal order.
"""
from collections import namedtuple

import numpy as np
from astropy import log

from ..config import ConfigDescriptor
from ..exceptions import DomainError
from ..rkwarnings import warn, CertificateWarning
from ..qmat.channels import KrausChannel, ReplacerSpec
from ..qmat.operators import DensityOperator
from ..qmat.sampling import random_state
from ..optimize.states import optimize_state
from ..optimize.chart import maximize_in_chart, alpha_from_u
from ..divergences.exponents import hoeffding_anti_divergence
from ..divergences.mutual_information import renyi_mutual_information
from ..divergences.values import ExponentReport
from ..parallel_map import parallel_map
from .objectives import induced_state_array
from .divergence import (channel_renyi_divergence, channel_relative_entropy,
                         channel_max_divergence, finiteness_check)
from .information import channel_mutual_information, channel_mutual_information_geometric

__all__ = ['stein_exponent', 'strong_converse_exponent', 'feedback_sc_exponent',
           'composite_stein_exponent', 'composite_sc_bounds', 'CompositeBounds']

CompositeBounds = namedtuple('CompositeBounds', ['lower', 'upper'])


def _check_rate(r):
    if not r > 0:
        raise DomainError("rate must be positive, got {0}".format(r))


def _replacer(sigma):
    return sigma if isinstance(sigma, ReplacerSpec) else ReplacerSpec(sigma)


def _sweep(evaluate, r, limit_at_infinity, warm):
    """
    Maximize ``u (r - F(alpha(u)))`` where ``evaluate(alpha, warm)`` returns
    ``(F, witness)``.  Returns the chart optimum and the last witness.
    """
    state = {'warm': warm}

    def objective(u):
        value, state['warm'] = evaluate(alpha_from_u(u), state['warm'])
        return u * (r - value)

    best = maximize_in_chart(objective, chart_grid=0,
                             endpoints={0.0: 0.0, 1.0: r - limit_at_infinity})
    return best, state['warm']


def stein_exponent(channel, sigma, **kwargs):
    """
    Optimal type-II error exponent of adaptive discrimination of ``channel``
    against the replacer channel with output ``sigma``: ``D(N || R_sigma)``.
    """
    report = channel_relative_entropy(channel, _replacer(sigma), **kwargs)
    report.extra['quantity'] = 'stein_exponent'
    return report


@ConfigDescriptor
def strong_converse_exponent(channel, sigma, r, seeds=None, certify=True, minimax=True,
                             certificate_tol=None):
    """
    Strong converse exponent ``sc(r)`` of adaptive discrimination against a
    replacer channel,
    ``sup_{alpha>1} (alpha-1)/alpha (r - D~_alpha(N || R_sigma))``.

    Returns 0 when ``r`` does not exceed ``D(N || R_sigma)`` and ``inf``
    (flagged ``support_condition_fails``) when the divergences are infinite.
    With ``minimax=True`` the exchanged form
    ``inf_rho sup_alpha (alpha-1)/alpha (r - D~_alpha(omega_N(rho) || rho (x) sigma))``
    is also evaluated and the difference stored in ``gap_certificate``.
    """
    _check_rate(r)
    spec = _replacer(sigma)
    finite = finiteness_check(channel, spec)
    if not finite:
        return ExponentReport(np.inf, sigma_star=spec.sigma,
                              flags={'infinite', 'support_condition_fails'},
                              extra=dict(r=r, leak=finite.leak))

    d_rel = channel_relative_entropy(channel, spec, seeds=seeds, certify=certify)
    extra = dict(r=r, relative_entropy=d_rel.value)
    if r <= d_rel.value:
        return ExponentReport(0.0, alpha_star=1.0, rho_star=d_rel.rho_star,
                              sigma_star=spec.sigma, tolerance=certificate_tol,
                              flags={'below_threshold', 'attained_at_boundary'}, extra=extra)

    d_max = channel_max_divergence(channel, spec, seeds=seeds, certify=certify)
    extra['max_divergence'] = d_max.value

    def evaluate(alpha, warm):
        found = channel_renyi_divergence(channel, spec, alpha, seeds=(), starts=[warm],
                                         certify=False)
        return found.value, found.rho_star.matrix

    best, warm = _sweep(evaluate, r, d_max.value, d_rel.rho_star.matrix)
    alpha_star = alpha_from_u(best.argmax)
    value, rho_star, gap = best.value, d_rel.rho_star, 0.0
    if best.argmax >= 1:
        rho_star = d_max.rho_star
        gap = d_max.gap_certificate
    elif best.argmax > 0:
        found = channel_renyi_divergence(channel, spec, alpha_star, seeds=seeds, starts=[warm],
                                         certify=certify)
        value = max(0.0, best.argmax * (r - found.value))
        rho_star, gap = found.rho_star, found.gap_certificate

    flags = {'attained_at_boundary'} if best.at_boundary else set()
    if minimax:
        choi = channel.choi()
        d = channel.dim_in

        def exchanged(rho):
            omega = induced_state_array(choi, rho, channel.dim_out)
            return hoeffding_anti_divergence(omega, np.kron(rho, spec.sigma.matrix), r).value

        inf_sup = optimize_state(exchanged, d, maximize=False,
                                 starts=[rho_star.matrix, np.eye(d) / d], seeds=())
        extra['inf_sup'] = inf_sup.value
        gap = max(gap, abs(inf_sup.value - value))
    extra['sup_inf'] = value
    log.info("strong converse exponent at r={0}: {1:.12g} (alpha*={2:.6g}, gap {3:.3g})"
             .format(r, value, alpha_star, gap))
    return ExponentReport(value, alpha_star=alpha_star, rho_star=rho_star,
                          sigma_star=spec.sigma, gap_certificate=gap,
                          iterations=best.evaluations, tolerance=certificate_tol,
                          flags=flags, extra=extra)


def _information_sweep(channel, rate, seeds, certify, certificate_tol):
    if not isinstance(channel, KrausChannel):
        raise DomainError("expected a trace-preserving KrausChannel")
    info = channel_mutual_information(channel, 1.0, seeds=seeds, certify=certify)
    extra = dict(rate=rate, mutual_information=info.value)
    if rate <= info.value:
        return ExponentReport(0.0, alpha_star=1.0, rho_star=info.rho_star,
                              sigma_star=info.sigma_star, tolerance=certificate_tol,
                              flags={'below_threshold', 'attained_at_boundary'}, extra=extra)

    top = channel_mutual_information(channel, np.inf, seeds=seeds, certify=certify)
    extra['max_information'] = top.value

    def evaluate(alpha, warm):
        found = channel_mutual_information(channel, alpha, seeds=(), starts=[warm],
                                           certify=False)
        return found.value, found.rho_star.matrix

    best, warm = _sweep(evaluate, rate, top.value, info.rho_star.matrix)
    alpha_star = alpha_from_u(best.argmax)
    value, report = best.value, info
    if best.argmax >= 1:
        report = top
    elif best.argmax > 0:
        report = channel_mutual_information(channel, alpha_star, seeds=seeds, starts=[warm],
                                            certify=certify)
        value = max(0.0, best.argmax * (rate - report.value))
    flags = {'attained_at_boundary'} if best.at_boundary else set()
    return ExponentReport(value, alpha_star=alpha_star, rho_star=report.rho_star,
                          sigma_star=report.sigma_star, gap_certificate=report.gap_certificate,
                          iterations=best.evaluations, tolerance=certificate_tol,
                          flags=flags | report.flags, extra=extra)


@ConfigDescriptor
def feedback_sc_exponent(channel, rate, seeds=None, certify=True, certificate_tol=None):
    """
    ``sup_{alpha>1} (alpha-1)/alpha (R - I~_alpha(N))``.

    The success probability of any code with quantum feedback that sends
    ``nR`` bits in ``n`` channel uses is at most ``2^(-n value)``; the
    value is an upper-bound exponent, not known to be tight.
    """
    _check_rate(rate)
    report = _information_sweep(channel, rate, seeds, certify, certificate_tol)
    report.extra['bound'] = 'upper'
    log.info("feedback strong converse exponent at R={0}: {1:.12g}".format(rate, report.value))
    return report


@ConfigDescriptor
def composite_stein_exponent(channel, seeds=None, certify=True, certificate_tol=None):
    """
    Stein exponent for testing ``channel`` against the set of all replacer
    channels, computed as ``sup_rho inf_sigma`` and as ``inf_sigma sup_rho``
    of the relative entropy objective; ``gap_certificate`` is their
    difference.
    """
    sup_inf = channel_mutual_information(channel, 1.0, seeds=seeds, certify=certify)
    inf_sup = channel_mutual_information_geometric(channel, 1.0, seeds=seeds, certify=certify)
    gap = abs(sup_inf.value - inf_sup.value)
    if gap > certificate_tol:
        warn("composite Stein exponent: sup-inf {0:.9g} and inf-sup {1:.9g} differ"
             .format(sup_inf.value, inf_sup.value), CertificateWarning)
    return ExponentReport(sup_inf.value, alpha_star=1.0, rho_star=sup_inf.rho_star,
                          sigma_star=inf_sup.sigma_star, gap_certificate=gap,
                          iterations=sup_inf.iterations + inf_sup.iterations,
                          tolerance=certificate_tol, flags=sup_inf.flags | inf_sup.flags,
                          extra=dict(sup_inf=sup_inf.value, inf_sup=inf_sup.value))


def _state_information_exponent(omega, r):
    """``sup_{alpha>1} (alpha-1)/alpha (r - I~_alpha(omega))`` for a bipartite state."""
    if r <= float(renyi_mutual_information(omega, 1.0, certify=False, seeds=())):
        return 0.0
    top = renyi_mutual_information(omega, np.inf, certify=False, seeds=())

    def evaluate(alpha, warm):
        found = renyi_mutual_information(omega, alpha, certify=False, seeds=(), starts=[warm])
        return found.value, found.sigma_star.matrix

    return _sweep(evaluate, r, top.value, top.sigma_star.matrix)[0].value


@ConfigDescriptor
def composite_sc_bounds(channel, r, seeds=None, certify=True, composite_samples=None,
                        certificate_tol=None):
    """
    Lower and upper bounds on the strong converse exponent of testing
    ``channel`` against all replacer channels.

    The lower bound is ``sup_sigma sc(r; N, R_sigma)``, evaluated as
    ``sup_alpha (alpha-1)/alpha (r - I~_alpha(N))``.  The upper bound is the
    smallest, over sampled inputs rho (the maximally mixed state, the
    lower-bound witness and ``composite_samples`` random states), of
    ``sup_{alpha,sigma} (alpha-1)/alpha (r - D~_alpha(omega(rho) || rho (x) sigma))``.
    The two are not asserted equal; a lower bound above the upper bound is
    clamped and reported with a `CertificateWarning`.

    Returns
    -------
    CompositeBounds
        ``(lower, upper)`` as `ExponentReport` objects.
    """
    _check_rate(r)
    lower = _information_sweep(channel, r, seeds, certify, certificate_tol)
    d = channel.dim_in
    candidates = [np.eye(d) / d, lower.rho_star.matrix]
    candidates += [random_state(d, 1000 + k).matrix for k in range(int(composite_samples))]
    choi = channel.choi()

    def upper_at(rho):
        m = induced_state_array(choi, rho, channel.dim_out)
        omega = DensityOperator(m / np.trace(m).real, dims=(d, channel.dim_out))
        return _state_information_exponent(omega, r)

    values = parallel_map(upper_at, candidates)
    k = int(np.argmin(values))
    upper = ExponentReport(values[k], rho_star=DensityOperator.normalized(candidates[k]),
                           tolerance=certificate_tol,
                           extra=dict(r=r, samples=len(candidates)))
    if lower.value > upper.value:
        excess = lower.value - upper.value
        if excess > certificate_tol:
            warn("composite bounds: lower bound exceeds upper bound by {0:.3g}; clamped"
                 .format(excess), CertificateWarning)
        lower.flags.add('clamped')
        lower.gap_certificate = max(lower.gap_certificate, excess)
        lower.value = upper.value
    log.info("composite strong converse bounds at r={0}: [{1:.9g}, {2:.9g}]"
             .format(r, lower.value, upper.value))
    return CompositeBounds(lower, upper)
