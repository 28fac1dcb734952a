"""
n-round adaptive discrimination of a channel against a replacer channel.

The strategy prepares ``rho_{R1 A1}``, sends A_i through the unknown
channel, processes ``R_i B_i -> R_{i+1} A_{i+1}`` with the adaptive channel
of round i, and finally measures ``R_n B_n`` with a binary test.  Both
hypotheses are evolved side by side.
"""
import numpy as np
from astropy import log

from ..config import ConfigDescriptor
from ..exceptions import DomainError, VerificationError
from ..qmat.operators import DensityOperator, PureState, as_matrix
from ..qmat.linalg import support_power_array, kron_array, schatten_norm
from ..qmat.subsystems import partial_trace_array, gamma_vector
from ..qmat.channels import KrausChannel, ReplacerSpec, apply_kraus_array
from ..qmat.sampling import rng_for, random_state, random_channel
from ..divergences.renyi import sandwiched_renyi
from ..divergences.hypothesis import (BinaryTest, BoundCheck, hypothesis_testing,
                                      random_binary_test)
from ..channel_analysis.divergence import channel_renyi_divergence, finiteness_check

__all__ = ['AdaptiveStrategy', 'StrategyOutcome', 'run_adaptive', 'renyi_cb_bound_check',
           'nagaoka_bound_check', 'optimal_final_test', 'canonical_purification',
           'tensor_power_strategy', 'random_strategy']


def _two_labels(dims, what):
    if len(dims) != 2:
        raise DomainError("{0} must carry two subsystem labels (memory, system), got {1}"
                          .format(what, dims))
    return tuple(dims)


class AdaptiveStrategy(object):
    """
    Parameters
    ----------
    initial_state : DensityOperator
        State on R_1 A_1, ``dims == (d_R1, d_A)``.
    adaptive_channels : sequence of KrausChannel
        Round i maps ``R_i B_i -> R_{i+1} A_{i+1}``; ``dims_in == (d_Ri, d_B)``
        and ``dims_out == (d_R(i+1), d_A)``.  There are ``n_rounds - 1`` of
        them.
    final_test : BinaryTest
        Test on R_n B_n; ``Q`` accepts the channel under test.
    """

    def __init__(self, initial_state, adaptive_channels, final_test):
        if not isinstance(initial_state, DensityOperator):
            raise DomainError("initial state must be a DensityOperator")
        d_r, d_a = _two_labels(initial_state.dims, "initial state")
        channels = list(adaptive_channels)
        d_b = None
        labels = [(d_r, d_a)]
        for i, ch in enumerate(channels):
            if not isinstance(ch, KrausChannel):
                raise DomainError("adaptive channel {0} is not a KrausChannel".format(i))
            r_in, b = _two_labels(ch.dims_in, "adaptive channel {0} input".format(i))
            r_out, a = _two_labels(ch.dims_out, "adaptive channel {0} output".format(i))
            if r_in != labels[-1][0] or a != d_a or (d_b is not None and b != d_b):
                raise DomainError("adaptive channel {0} maps {1} -> {2}, which does not chain "
                                  "with memory {3}, A={4}, B={5}"
                                  .format(i, ch.dims_in, ch.dims_out, labels[-1][0], d_a, d_b))
            d_b = b
            labels.append((r_out, d_a))
        r_n, b = _two_labels(final_test.dims, "final test")
        if r_n != labels[-1][0] or (d_b is not None and b != d_b):
            raise DomainError("final test on {0} does not match R_n B_n = ({1}, {2})"
                              .format(final_test.dims, labels[-1][0], d_b))
        self.initial_state = initial_state
        self.adaptive_channels = channels
        self.final_test = final_test
        self.dims_labels = labels
        self.d_a = d_a
        self.d_b = b

    @property
    def n_rounds(self):
        return len(self.adaptive_channels) + 1

    def with_final_test(self, test):
        return AdaptiveStrategy(self.initial_state, self.adaptive_channels, test)

    def __repr__(self):
        return ("AdaptiveStrategy(n_rounds={0}, A={1}, B={2}, memory={3})"
                .format(self.n_rounds, self.d_a, self.d_b, [r for r, _ in self.dims_labels]))


class StrategyOutcome(object):
    """
    Attributes
    ----------
    rho_out, tau_out : DensityOperator
        States on R_n B_n under the channel and under the replacer, before
        the final test.
    type1 : float
        ``Tr (I - Q) rho_out``.
    type2 : float
        ``Tr Q tau_out``.
    factorization_residual : float
        Largest trace distance between ``tau_{R_i B_i}`` and
        ``tau_{R_i} (x) sigma`` over the rounds.
    """

    def __init__(self, rho_out, tau_out, type1, type2, n_rounds, factorization_residual=0.0):
        self.rho_out = rho_out
        self.tau_out = tau_out
        self.type1 = float(np.clip(type1, 0, 1))
        self.type2 = float(np.clip(type2, 0, 1))
        self.n_rounds = n_rounds
        self.factorization_residual = factorization_residual

    def __repr__(self):
        return ("StrategyOutcome(n_rounds={0}, type1={1:.6g}, type2={2:.6g})"
                .format(self.n_rounds, self.type1, self.type2))


@ConfigDescriptor
def run_adaptive(strategy, channel, replacer, factorization_tol=None):
    """
    Evolve both hypotheses through ``strategy``.

    Raises
    ------
    DomainError
        The channel or replacer does not fit the strategy's A and B.
    VerificationError
        The replacer branch fails to factorize as ``tau_{R_i} (x) sigma``.
    """
    if not isinstance(replacer, ReplacerSpec):
        replacer = ReplacerSpec(replacer)
    d_a, d_b = strategy.d_a, strategy.d_b
    if channel.dim_in != d_a or (d_b is not None and channel.dim_out != d_b):
        raise DomainError("channel maps {0} -> {1}; the strategy expects {2} -> {3}"
                          .format(channel.dim_in, channel.dim_out, d_a, d_b))
    d_b = channel.dim_out
    if replacer.dim_out != d_b:
        raise DomainError("replacer output dimension {0} differs from B = {1}"
                          .format(replacer.dim_out, d_b))
    sigma = replacer.sigma.matrix
    alternative = replacer.channel(d_a)

    rho = tau = strategy.initial_state.matrix
    residual = 0.0
    for i, (d_r, _) in enumerate(strategy.dims_labels):
        rho, _ = apply_kraus_array(channel.kraus, rho, (d_r, d_a), acting_on=1)
        tau, _ = apply_kraus_array(alternative.kraus, tau, (d_r, d_a), acting_on=1)
        tau_r = partial_trace_array(tau, (d_r, d_b), 0)
        gap = schatten_norm(tau - np.kron(tau_r, sigma), 1)
        residual = max(residual, gap)
        if gap > factorization_tol:
            raise VerificationError("round {0}: replacer branch does not factorize "
                                    "(trace distance {1:.3g})".format(i + 1, gap))
        if i < len(strategy.adaptive_channels):
            kraus = strategy.adaptive_channels[i].kraus
            rho, _ = apply_kraus_array(kraus, rho, (d_r * d_b,))
            tau, _ = apply_kraus_array(kraus, tau, (d_r * d_b,))

    dims = (strategy.dims_labels[-1][0], d_b)
    rho_out = DensityOperator.normalized(rho, dims=dims)
    tau_out = DensityOperator.normalized(tau, dims=dims)
    test = strategy.final_test
    outcome = StrategyOutcome(rho_out, tau_out, test.type1(rho_out), test.type2(tau_out),
                              strategy.n_rounds, residual)
    log.debug("adaptive run: {0!r}".format(outcome))
    return outcome


def _channel_divergence(channel, replacer, alpha, channel_divergence, seeds):
    if channel_divergence is not None:
        return float(channel_divergence)
    return float(channel_renyi_divergence(channel, replacer, alpha, seeds=seeds).value)


def renyi_cb_bound_check(strategy, channel, replacer, alpha, channel_divergence=None,
                         seeds=None, tol=1e-6):
    """
    ``D~_alpha(rho_{R_n B_n} || tau_{R_n B_n}) <= n D~_alpha(N || R_sigma)`` on
    the states before the final test.

    ``channel_divergence`` may carry a precomputed ``D~_alpha(N || R_sigma)``.
    """
    if not alpha > 1:
        raise DomainError("the bound is checked for alpha > 1")
    if not isinstance(replacer, ReplacerSpec):
        replacer = ReplacerSpec(replacer)
    if not finiteness_check(channel, replacer):
        raise DomainError("the channel reaches outside the support of the replacer output")
    outcome = run_adaptive(strategy, channel, replacer)
    lhs = float(sandwiched_renyi(outcome.rho_out, outcome.tau_out, alpha))
    rhs = strategy.n_rounds * _channel_divergence(channel, replacer, alpha,
                                                  channel_divergence, seeds)
    return BoundCheck(lhs, rhs, lhs <= rhs + tol)


def nagaoka_bound_check(strategy, channel, replacer, alpha, channel_divergence=None,
                        seeds=None, tol=1e-6):
    """
    ``(1/n) log2(1 - type1) <= (alpha-1)/alpha (-r + D~_alpha(N || R_sigma))``
    with ``r = -(1/n) log2 type2`` the rate the strategy achieves.
    """
    if not alpha > 1:
        raise DomainError("the bound is checked for alpha > 1")
    outcome = run_adaptive(strategy, channel, replacer)
    n = strategy.n_rounds
    divergence = _channel_divergence(channel, replacer, alpha, channel_divergence, seeds)
    with np.errstate(divide='ignore'):
        lhs = np.log2(1 - outcome.type1) / n
        rate = -np.log2(outcome.type2) / n
    rhs = (alpha - 1) / alpha * (divergence - rate)
    return BoundCheck(lhs, rhs, lhs <= rhs + tol or np.isinf(divergence))


def optimal_final_test(strategy, channel, replacer, epsilon):
    """
    Replace the final test by the Neyman-Pearson test between the two
    pre-measurement states at type-I level ``epsilon``.
    """
    outcome = run_adaptive(strategy, channel, replacer)
    result = hypothesis_testing(outcome.rho_out, outcome.tau_out, epsilon)
    return strategy.with_final_test(BinaryTest(result.test.Q, dims=outcome.rho_out.dims))


def canonical_purification(rho):
    """
    ``(rho^(1/2) (x) I)|Gamma>`` on R A; probing a channel with it gives
    ``omega_N(rho)``.
    """
    m = as_matrix(rho)
    d = m.shape[0]
    vector = kron_array(support_power_array(m, 0.5), np.eye(d)) @ gamma_vector(d).amplitudes
    return PureState(vector, dims=(d, d))


def _append_fresh_copy(d_in, psi):
    """The channel ``X -> X (x) psi`` as a single Kraus operator."""
    column = psi.amplitudes.reshape(-1, 1)
    return np.kron(np.eye(d_in), column)


def tensor_power_strategy(psi, n_rounds, d_b, final_test=None):
    """
    Parallel strategy: every round sends the A half of a fresh copy of
    ``psi`` (dims ``(d_R, d_A)``) and stores everything else in memory.

    Without ``final_test`` the test accepts always.
    """
    if not isinstance(psi, PureState):
        psi = PureState(psi)
    d_r, d_a = _two_labels(psi.dims, "probe")
    if n_rounds < 1:
        raise DomainError("a strategy has at least one round")
    channels = []
    memory = d_r
    for _ in range(n_rounds - 1):
        kraus = _append_fresh_copy(memory * d_b, psi)
        channels.append(KrausChannel([kraus], dims_in=(memory, d_b),
                                     dims_out=(memory * d_b * d_r, d_a)))
        memory = memory * d_b * d_r
    if final_test is None:
        final_test = BinaryTest(np.eye(memory * d_b), dims=(memory, d_b))
    initial = DensityOperator(psi.matrix, dims=(d_r, d_a))
    return AdaptiveStrategy(initial, channels, final_test)


def random_strategy(n_rounds, seed, d_r=2, d_a=2, d_b=2):
    """
    Strategy with a Ginibre initial state, isometry-dilated adaptive channels
    keeping a ``d_r``-dimensional memory, and a random final test.
    """
    if n_rounds < 1:
        raise DomainError("a strategy has at least one round")
    rng = rng_for(seed, 31)
    initial = random_state(d_r * d_a, rng, dims=(d_r, d_a))
    channels = [random_channel(d_r * d_b, d_r * d_a, seed=rng, dims_in=(d_r, d_b),
                               dims_out=(d_r, d_a))
                for _ in range(n_rounds - 1)]
    test = random_binary_test(d_r * d_b, rng, dims=(d_r, d_b))
    return AdaptiveStrategy(initial, channels, test)
