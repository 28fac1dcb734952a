"""
Channel Renyi divergences, the completely bounded (1 -> alpha) norm and the
support test for replacer channels.
"""
import numpy as np
from astropy import log

from ..config import ConfigDescriptor
from ..exceptions import DomainError
from ..rkwarnings import warn, HeuristicRangeWarning, CertificateWarning
from ..qmat.operators import DensityOperator, PureState
from ..qmat.linalg import hermitian_eig, support_mask, support_power_array, schatten_from_values
from ..qmat.channels import ReplacerSpec, apply_kraus_array
from ..qmat.subsystems import partial_trace_array
from ..optimize.states import optimize_state
from ..optimize.bloch import grid_search
from ..divergences.values import ExponentReport
from .objectives import ChannelDivergenceQuery, induced_state_array

__all__ = ['channel_renyi_divergence', 'channel_relative_entropy', 'channel_max_divergence',
           'cb_one_to_alpha_norm', 'replacer_divergence_via_cb', 'finiteness_check',
           'FinitenessResult']


def _as_query(query, channel_2=None, alpha=None, family='sandwiched'):
    if isinstance(query, ChannelDivergenceQuery):
        return query
    return ChannelDivergenceQuery(query, channel_2, alpha, family)


def merge_grid_optimum(value, state, grid, maximize, certificate_tol, what):
    """Merge a grid optimum into a descent optimum; returns value, state, gap, won."""
    gap = (grid.value - value) if maximize else (value - grid.value)
    gap = 0.0 if np.isnan(gap) else max(0.0, gap)
    won = gap > 0
    if won:
        value, state = grid.value, grid.state
    if gap > certificate_tol:
        warn("{0}: grid search beats gradient search by {1:.3g}".format(what, gap),
             CertificateWarning)
    else:
        log.info("{0}: grid certificate {1:.3g} over {2} states".format(
            what, gap, grid.evaluations))
    return value, state, gap, won


@ConfigDescriptor
def channel_renyi_divergence(query, channel_2=None, alpha=None, family='sandwiched',
                             seeds=None, starts=(), certify=True, certificate_tol=None):
    """
    Renyi divergence of two channels,
    ``sup_rho D_alpha(omega_1(rho) || omega_2(rho))``.

    Parameters
    ----------
    query : ChannelDivergenceQuery or KrausChannel
        Either a prepared query, or the first channel (then ``channel_2``
        and ``alpha`` are required).
    seeds : iterable of int, optional
        Multi-start seeds; defaults to ``range(multistart_seeds)``.
    starts : sequence of array_like
        Extra starting inputs, tried before the seeded ones.
    certify : bool
        For a qubit input, also search a Bloch-ball grid of inputs.

    Returns
    -------
    ExponentReport
        ``rho_star`` is the optimal input on A'.  ``gap_certificate`` is the
        amount by which the grid beats gradient search.
    """
    q = _as_query(query, channel_2, alpha, family)
    flags = set()
    if q.heuristic:
        flags.add('heuristic')
        warn("alpha = {0} is outside the certified range of the {1} family; "
             "the result is a local optimum".format(q.alpha, q.family), HeuristicRangeWarning)

    d = q.dim_in
    mixed = np.eye(d) / d
    at_mixed = q.objective(mixed)
    if np.isinf(at_mixed):
        # the maximally mixed input has the largest output support
        return ExponentReport(np.inf, alpha_star=q.alpha, rho_star=DensityOperator(mixed),
                              flags=flags | {'infinite'})

    search = optimize_state(q.objective, d, maximize=True, starts=[mixed] + list(starts),
                            seeds=seeds)
    value, state, seed = search.value, search.state, search.seed
    gap = 0.0
    if certify and d == 2:
        grid = grid_search(q.objective_array, maximize=True)
        value, state, gap, won = merge_grid_optimum(
            value, state, grid, True, certificate_tol,
            "channel divergence at alpha={0}".format(q.alpha))
        if won:
            seed = 'grid'
    log.debug("channel divergence at alpha={0}: {1:.12g} (seed {2})".format(q.alpha, value, seed))
    return ExponentReport(value, alpha_star=q.alpha,
                          rho_star=DensityOperator.normalized(state),
                          gap_certificate=gap, iterations=search.iterations,
                          tolerance=certificate_tol, flags=flags, seed=seed)


def channel_relative_entropy(channel, sigma, **kwargs):
    """
    ``D(N || R_sigma)``: the channel divergence at alpha = 1 against the
    replacer channel with output ``sigma``.
    """
    if not isinstance(sigma, ReplacerSpec):
        sigma = ReplacerSpec(sigma)
    return channel_renyi_divergence(channel, sigma, 1.0, **kwargs)


def channel_max_divergence(channel_1, channel_2, **kwargs):
    """The alpha -> inf limit of the sandwiched channel divergence."""
    return channel_renyi_divergence(channel_1, channel_2, np.inf, 'sandwiched', **kwargs)


class FinitenessResult(object):
    """
    Truth value of ``supp N(rho) <= supp sigma`` for all inputs; when false,
    ``witness`` is an output vector in the kernel of sigma that the channel
    reaches.
    """

    def __init__(self, finite, witness=None, leak=0.0):
        self.finite = bool(finite)
        self.witness = witness
        self.leak = float(leak)

    def __bool__(self):
        return self.finite

    def __iter__(self):
        return iter((self.finite, self.witness))

    def __repr__(self):
        return "FinitenessResult(finite={0}, leak={1:.3g})".format(self.finite, self.leak)


@ConfigDescriptor
def finiteness_check(channel, sigma, support_tol=None):
    """
    Decide whether ``D~_alpha(N || R_sigma)`` is finite for alpha > 1 by
    testing the output support of the maximally mixed input.
    """
    sigma = sigma.sigma if isinstance(sigma, ReplacerSpec) else ReplacerSpec(sigma).sigma
    if sigma.dim != channel.dim_out:
        raise DomainError("replacer output dimension {0} does not match channel output {1}"
                          .format(sigma.dim, channel.dim_out))
    d = channel.dim_in
    out = channel.apply_array(np.eye(d) / d)
    w, v = hermitian_eig(sigma.matrix)
    kernel = v[:, ~support_mask(w)]
    if kernel.shape[1] == 0:
        return FinitenessResult(True)
    restricted = kernel.conj().T @ out @ kernel
    rw, rv = np.linalg.eigh(restricted)
    leak = float(rw[-1])
    if leak <= support_tol * max(np.trace(out).real, 1.0):
        return FinitenessResult(True, leak=max(leak, 0.0))
    witness = kernel @ rv[:, -1]
    return FinitenessResult(False, PureState.from_unnormalized(witness), leak=leak)


def _cb_ratio(kraus, d, alpha):
    def ratio(projector):
        out, _ = apply_kraus_array(kraus, projector, (d, d), acting_on=1)
        reduced = partial_trace_array(projector, (d, d), 0)
        numerator = schatten_from_values(np.linalg.svd(out, compute_uv=False), alpha)
        denominator = schatten_from_values(np.linalg.eigvalsh(reduced), alpha)
        return float(numerator / denominator)
    return ratio


def _cb_ratio_array(kraus_map, alpha):
    choi = kraus_map.choi()

    def ratio(ys):
        out = induced_state_array(choi, ys, kraus_map.dim_out)
        numerator = schatten_from_values(np.linalg.svd(out, compute_uv=False), alpha)
        denominator = schatten_from_values(np.linalg.eigvalsh(ys), alpha)
        return numerator / denominator
    return ratio


@ConfigDescriptor
def cb_one_to_alpha_norm(kraus_map, alpha, seeds=None, certify=True, certificate_tol=None):
    """
    Completely bounded (1 -> alpha) norm
    ``sup_psi ||(id (x) N)(psi)||_alpha / ||Tr_A psi||_alpha`` over pure
    probes on A'A with A' a copy of A.

    ``kraus_map`` need not be trace preserving.  For a qubit input the
    search over pure probes is cross-checked on a Bloch grid of the
    equivalent input-state form.

    ``alpha = 1`` returns the alpha -> 1 limit, the largest eigenvalue of
    ``N^dagger(1) = sum_k K_k^dagger K_k`` (1 for a channel).  Orders below
    one raise `DomainError`.

    Returns
    -------
    ExponentReport
    """
    if alpha == 1:
        w, v = hermitian_eig(np.einsum('kji,kjl->il', kraus_map.kraus.conj(), kraus_map.kraus))
        top = v[:, -1]
        return ExponentReport(float(w[-1]), alpha_star=1.0,
                              rho_star=DensityOperator(np.outer(top, top.conj()).T),
                              flags={'attained_at_boundary'}, extra=dict(limit=True))
    if not alpha > 1:
        raise DomainError("the CB (1 -> alpha) norm is computed for alpha >= 1, got {0}"
                          .format(alpha))
    d = kraus_map.dim_in
    probe = np.eye(d).ravel() / np.sqrt(d)
    search = optimize_state(_cb_ratio(kraus_map.kraus, d, alpha), d * d, maximize=True,
                            starts=[probe], seeds=seeds, pure=True)
    value = search.value
    rho_star = partial_trace_array(search.state, (d, d), 1).T
    gap = 0.0
    if certify and d == 2:
        grid = grid_search(_cb_ratio_array(kraus_map, alpha), maximize=True)
        value, rho_star, gap, _ = merge_grid_optimum(
            value, rho_star, grid, True, certificate_tol, "CB norm at alpha={0}".format(alpha))
    return ExponentReport(value, alpha_star=alpha, rho_star=DensityOperator.normalized(rho_star),
                          gap_certificate=gap, iterations=search.iterations,
                          tolerance=certificate_tol, seed=search.seed)


def replacer_divergence_via_cb(channel, sigma, alpha, **kwargs):
    """
    ``D~_alpha(N || R_sigma) = alpha/(alpha-1) log2 ||Theta o N||_CB,1->alpha``
    with ``Theta`` the conjugation by ``sigma^((1-alpha)/alpha)``;
    ``inf`` when the output support condition fails.
    """
    if not alpha > 1:
        raise DomainError("the norm identity holds for alpha > 1")
    spec = sigma if isinstance(sigma, ReplacerSpec) else ReplacerSpec(sigma)
    finite = finiteness_check(channel, spec)
    if not finite:
        return ExponentReport(np.inf, alpha_star=alpha, flags={'infinite',
                                                               'support_condition_fails'})
    theta = channel.conjugated(support_power_array(spec.sigma.matrix, (1 - alpha) / alpha))
    norm = cb_one_to_alpha_norm(theta, alpha, **kwargs)
    norm.extra['cb_norm'] = norm.value
    norm.value = alpha / (alpha - 1) * np.log2(norm.value)
    return norm
