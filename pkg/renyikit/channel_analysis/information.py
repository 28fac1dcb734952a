"""
Renyi mutual information of a channel, in the two forms related by a
minimax exchange:

``I_alpha(N) = sup_rho inf_sigma D_alpha(omega(rho) || rho (x) sigma)``
(`channel_mutual_information`) and
``inf_sigma D_alpha(N || R_sigma)`` (`channel_mutual_information_geometric`).
"""
import numpy as np
from astropy import log

from ..config import ConfigDescriptor
from ..exceptions import DomainError
from ..rkwarnings import warn, HeuristicRangeWarning
from ..qmat.operators import DensityOperator
from ..qmat.linalg import kron_array
from ..qmat.channels import KrausChannel, ReplacerSpec
from ..optimize.states import optimize_state, sup_inf_states, inf_sup_states
from ..optimize.bloch import grid_search
from ..divergences.renyi import divergence_array, FAMILIES
from ..divergences.mutual_information import renyi_mutual_information
from ..divergences.values import ExponentReport
from ..parallel_map import parallel_map
from .objectives import ChannelDivergenceQuery, induced_state_array, outside_certified_range
from .divergence import channel_renyi_divergence, merge_grid_optimum

__all__ = ['channel_mutual_information', 'channel_mutual_information_geometric']


def _check(channel, alpha, family):
    if not isinstance(channel, KrausChannel):
        raise DomainError("mutual information needs a trace-preserving KrausChannel")
    if family not in FAMILIES:
        raise DomainError("unknown divergence family {0!r}; expected one of {1}"
                          .format(family, FAMILIES))
    if not alpha > 0:
        raise DomainError("Renyi order must be positive, got {0}".format(alpha))
    flags = set()
    if outside_certified_range(alpha, family):
        flags.add('heuristic')
        warn("alpha = {0} is outside the certified range of the {1} family"
             .format(alpha, family), HeuristicRangeWarning)
    return flags


class _Probe(object):
    """The output state omega(rho) of a channel and its pairing with rho (x) sigma."""

    def __init__(self, channel, alpha, family):
        self.choi = channel.choi()
        self.d_in = channel.dim_in
        self.d_out = channel.dim_out
        self.alpha = alpha
        self.family = family

    def omega(self, rho):
        m = induced_state_array(self.choi, np.asarray(rho), self.d_out)
        return DensityOperator(m / np.trace(m).real, dims=(self.d_in, self.d_out))

    def divergence(self, rho, sigma):
        m = induced_state_array(self.choi, np.asarray(rho), self.d_out)
        return float(divergence_array(m, kron_array(rho, sigma), self.alpha, self.family))

    def inner_min(self, rho, warm=None, certify=False, seeds=()):
        starts = [] if warm is None else [warm]
        report = renyi_mutual_information(self.omega(rho), self.alpha, self.family,
                                          seeds=seeds, starts=starts, certify=certify)
        return report.value, report.sigma_star.matrix


def _grid_values(function, states):
    return np.asarray(parallel_map(function, list(states)), dtype=float)


@ConfigDescriptor
def channel_mutual_information(channel, alpha, family='sandwiched', seeds=None, starts=(),
                               certify=True, certificate_tol=None, alpha_one_window=None,
                               minimax_grid_resolution=None):
    """
    ``sup_rho inf_sigma D_alpha(omega(rho) || rho (x) sigma)``; at alpha = 1
    this is the channel mutual information I(N).

    At alpha = 1 and for the Petz family the inner minimum has a closed form
    and only the outer concave maximization is numerical.  Otherwise the
    saddle point is found by `sup_inf_states`.  For a qubit input the outer
    maximum is cross-checked on a coarse Bloch grid.

    Returns
    -------
    ExponentReport
        ``rho_star`` on A', ``sigma_star`` on B.
    """
    flags = _check(channel, alpha, family)
    probe = _Probe(channel, alpha, family)
    d = probe.d_in
    initial = [np.eye(d) / d] + list(starts)
    closed_form = family == 'petz' or abs(alpha - 1) < alpha_one_window

    if closed_form:
        search = optimize_state(lambda rho: probe.inner_min(rho)[0], d, maximize=True,
                                starts=initial, seeds=seeds)
        warm = None
    else:
        search = sup_inf_states(probe.divergence, probe.inner_min, d, starts=initial,
                                seeds=seeds)
        warm = search.witness
    rho_star = search.state
    value, sigma_star = probe.inner_min(rho_star, warm, certify=certify, seeds=None)

    gap = 0.0
    if certify and d == 2:
        grid = grid_search(lambda stack: _grid_values(lambda r: probe.inner_min(r)[0], stack),
                           maximize=True, grid_resolution=minimax_grid_resolution)
        value, rho_star, gap, won = merge_grid_optimum(
            value, rho_star, grid, True, certificate_tol,
            "channel mutual information at alpha={0}".format(alpha))
        if won:
            sigma_star = probe.inner_min(rho_star, certify=True, seeds=None)[1]
    log.debug("channel mutual information at alpha={0}: {1:.12g}".format(alpha, value))
    return ExponentReport(value, alpha_star=alpha, rho_star=DensityOperator.normalized(rho_star),
                          sigma_star=DensityOperator.normalized(sigma_star),
                          gap_certificate=gap, iterations=search.iterations,
                          tolerance=certificate_tol, flags=flags, seed=search.seed,
                          extra=dict(family=family))


@ConfigDescriptor
def channel_mutual_information_geometric(channel, alpha, family='sandwiched', seeds=None,
                                         starts=(), certify=True, certificate_tol=None,
                                         minimax_grid_resolution=None):
    """
    ``inf_sigma D_alpha(N || R_sigma)``, the distance of the channel to the
    set of replacer channels, with the closest replacer output ``sigma_star``.
    """
    flags = _check(channel, alpha, family)
    probe = _Probe(channel, alpha, family)
    d_in, d_out = probe.d_in, probe.d_out
    mixed_in = np.eye(d_in) / d_in

    def objective(sigma, rho):
        return probe.divergence(rho, sigma)

    def inner_max(sigma, warm=None):
        query = ChannelDivergenceQuery(channel, ReplacerSpec(DensityOperator.normalized(sigma)),
                                       alpha, family)
        found = optimize_state(query.objective, d_in, maximize=True,
                               starts=[mixed_in] + ([] if warm is None else [warm]), seeds=())
        return found.value, found.state

    initial = [channel.apply_array(mixed_in)] + list(starts)
    search = inf_sup_states(objective, inner_max, d_out, starts=initial, seeds=seeds)
    sigma_star = DensityOperator.normalized(search.state)
    final = channel_renyi_divergence(channel, ReplacerSpec(sigma_star), alpha, family, seeds=(),
                                     starts=[search.witness], certify=certify)
    value, rho_star = final.value, final.rho_star.matrix

    gap = final.gap_certificate
    if certify and d_out == 2:
        grid = grid_search(lambda stack: _grid_values(lambda s: inner_max(s)[0], stack),
                           maximize=False, grid_resolution=minimax_grid_resolution)
        value, sigma_matrix, grid_gap, won = merge_grid_optimum(
            value, sigma_star.matrix, grid, False, certificate_tol,
            "geometric mutual information at alpha={0}".format(alpha))
        gap = max(gap, grid_gap)
        if won:
            sigma_star = DensityOperator.normalized(sigma_matrix)
            rho_star = inner_max(sigma_matrix)[1]
    log.debug("geometric mutual information at alpha={0}: {1:.12g}".format(alpha, value))
    return ExponentReport(value, alpha_star=alpha, rho_star=DensityOperator.normalized(rho_star),
                          sigma_star=sigma_star, gap_certificate=gap,
                          iterations=search.iterations, tolerance=certificate_tol,
                          flags=flags | final.flags, seed=search.seed,
                          extra=dict(family=family))
