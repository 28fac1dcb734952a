"""
Codes that use a channel n times with noiseless quantum feedback.

Round i encodes message m with ``E^i_m: A'_{i-1} X_{i-1} -> A'_i A_i``,
where A' is the sender's private memory (trivial before the first round),
sends A_i through the channel, and (except in the last round) decodes with
``D^i: B_i B'_{i-1} -> X_i B'_i``, returning X_i to the sender.  After the
last round A'_n is discarded and the receiver measures ``B_n B'_{n-1}`` with
the POVM ``{D^m}``.
"""
import numpy as np
from astropy import log

from ..config import mycfg, ConfigDescriptor
from ..exceptions import DomainError, VerificationError
from ..qmat.operators import DensityOperator
from ..qmat.channels import (KrausChannel, ReplacerSpec, PAULIS, apply_kraus_array,
                             unitary_channel)
from ..qmat.subsystems import maximally_entangled, partial_trace_array
from ..qmat.sampling import rng_for, random_state, random_channel, random_povm
from ..divergences.hypothesis import BoundCheck
from ..channel_analysis.information import channel_mutual_information

__all__ = ['FeedbackProtocol', 'run_feedback', 'run_feedback_replacer',
           'feedback_bound_check', 'superdense_coding_protocol', 'random_protocol']


def _encoder_outputs(channel):
    """``(d_A', d_A)`` of an encoder; a single output label has no memory."""
    dims = channel.dims_out
    if len(dims) == 1:
        return (1, dims[0])
    if len(dims) != 2:
        raise DomainError("encoders output A'_i A_i, got dims_out {0}".format(dims))
    return dims


class FeedbackProtocol(object):
    """
    Parameters
    ----------
    shared_state : DensityOperator
        State on X_0 B'_0 (``dims == (d_X0, d_B'0)``).
    encoders : sequence of sequence of KrausChannel
        ``encoders[i][m]`` is the encoder of round i + 1 for message m.  Its
        input has dimension ``d_A'_i * d_X_i`` and ``dims_out`` is
        ``(d_A'_{i+1}, d_A)``; a one-element ``dims_out`` keeps no memory.
        All encoders of a round share their output dims.
    decoders : sequence of KrausChannel
        ``n_uses - 1`` maps with ``dims_in == (d_B, d_B'_{i-1})`` and
        ``dims_out == (d_X_i, d_B'_i)``.
    povm : sequence of array_like
        One element per message on ``B_n B'_{n-1}``.
    """

    def __init__(self, shared_state, encoders, decoders, povm, povm_tol=None):
        if povm_tol is None:
            povm_tol = mycfg.povm_tol
        if not isinstance(shared_state, DensityOperator) or len(shared_state.dims) != 2:
            raise DomainError("shared state must be a DensityOperator on X_0 B'_0")
        encoders = [list(round_) for round_ in encoders]
        decoders = list(decoders)
        povm = np.array([np.asarray(e, dtype=complex) for e in povm])
        n_uses = len(encoders)
        message_count = len(povm)
        if n_uses < 1:
            raise DomainError("a protocol uses the channel at least once")
        if len(decoders) != n_uses - 1:
            raise DomainError("{0} channel uses need {1} decoders, got {2}"
                              .format(n_uses, n_uses - 1, len(decoders)))
        if any(len(round_) != message_count for round_ in encoders):
            raise DomainError("every round needs one encoder per message ({0})"
                              .format(message_count))

        d_x, d_mem = shared_state.dims
        d_sender = 1
        d_a = _encoder_outputs(encoders[0][0])[1]
        d_b = decoders[0].dims_in[0] if decoders else None
        encoder_dims = []
        for i, round_ in enumerate(encoders):
            outputs = _encoder_outputs(round_[0])
            for ch in round_:
                if ch.dim_in != d_sender * d_x or _encoder_outputs(ch) != outputs:
                    raise DomainError("round {0} encoder maps {1} -> {2}, expected {3} -> {4}"
                                      .format(i + 1, ch.dim_in, ch.dims_out,
                                              (d_sender, d_x), outputs))
            if outputs[1] != d_a:
                raise DomainError("round {0} encoders output A of dimension {1}, expected {2}"
                                  .format(i + 1, outputs[1], d_a))
            encoder_dims.append(outputs)
            d_sender = outputs[0]
            if i < len(decoders):
                dec = decoders[i]
                if (len(dec.dims_in) != 2 or len(dec.dims_out) != 2
                        or dec.dims_in != (d_b, d_mem)):
                    raise DomainError("round {0} decoder has dims {1} -> {2}; expected input "
                                      "({3}, {4})".format(i + 1, dec.dims_in, dec.dims_out,
                                                          d_b, d_mem))
                d_x, d_mem = dec.dims_out
        if d_b is not None and povm.shape[1] != d_b * d_mem:
            raise DomainError("POVM acts on dimension {0}, expected B_n B'_(n-1) = {1}"
                              .format(povm.shape[1], d_b * d_mem))
        if povm.shape[1] % d_mem:
            raise DomainError("POVM dimension {0} is not a multiple of the memory {1}"
                              .format(povm.shape[1], d_mem))
        if np.max(np.abs(povm.sum(axis=0) - np.eye(povm.shape[1]))) > povm_tol:
            raise DomainError("POVM elements do not sum to the identity")
        if np.any(np.linalg.eigvalsh(povm)[:, 0] < -povm_tol):
            raise DomainError("POVM elements must be positive semidefinite")

        self.shared_state = shared_state
        self.encoders = encoders
        self.decoders = decoders
        self.povm = povm
        self.d_a = d_a
        self.d_b = povm.shape[1] // d_mem
        self.final_memory = d_mem
        self.encoder_dims = encoder_dims

    @property
    def n_uses(self):
        return len(self.encoders)

    @property
    def sender_memory(self):
        """Largest A' dimension carried between rounds."""
        return max(d for d, _ in self.encoder_dims)

    @property
    def message_count(self):
        return len(self.povm)

    def __repr__(self):
        return ("FeedbackProtocol(n_uses={0}, message_count={1}, A={2}, B={3})"
                .format(self.n_uses, self.message_count, self.d_a, self.d_b))


def _final_states(protocol, kraus):
    """States on B_n B'_{n-1}, one per message, with the channel given by ``kraus``."""
    if kraus.shape[2] != protocol.d_a or kraus.shape[1] != protocol.d_b:
        raise DomainError("channel maps {0} -> {1}; the protocol expects {2} -> {3}"
                          .format(kraus.shape[2], kraus.shape[1], protocol.d_a, protocol.d_b))
    states = []
    for m in range(protocol.message_count):
        # subsystems are A' X B', then A' A B' and A' B B' within a round
        state = protocol.shared_state.matrix
        dims = (1,) + protocol.shared_state.dims
        for i in range(protocol.n_uses):
            state, dims = apply_kraus_array(protocol.encoders[i][m].kraus, state, dims,
                                            acting_on=(0, 1),
                                            dims_out=protocol.encoder_dims[i])
            state, dims = apply_kraus_array(kraus, state, dims, acting_on=1)
            if i < len(protocol.decoders):
                decoder = protocol.decoders[i]
                state, dims = apply_kraus_array(decoder.kraus, state, dims, acting_on=(1, 2),
                                                dims_out=decoder.dims_out)
        states.append(partial_trace_array(state, dims, (1, 2)))
    return np.array(states)


def _success(protocol, states):
    return float(np.einsum('mij,mji->', protocol.povm, states).real) / protocol.message_count


def run_feedback(protocol, channel):
    """Average success probability ``(1/M) sum_m Tr D^m rho^m``."""
    if not isinstance(channel, KrausChannel):
        raise DomainError("expected a trace-preserving KrausChannel")
    p_succ = _success(protocol, _final_states(protocol, channel.kraus))
    log.debug("feedback protocol {0!r}: success probability {1:.12g}".format(protocol, p_succ))
    return p_succ


@ConfigDescriptor
def run_feedback_replacer(protocol, sigma, factorization_tol=None):
    """
    Success probability with the channel replaced by ``R_sigma``.  The
    outputs no longer depend on the message, so the result must be
    ``1 / M``; a `VerificationError` is raised otherwise.
    """
    spec = sigma if isinstance(sigma, ReplacerSpec) else ReplacerSpec(sigma)
    p_succ = _success(protocol, _final_states(protocol, spec.channel(protocol.d_a).kraus))
    expected = 1.0 / protocol.message_count
    if abs(p_succ - expected) > factorization_tol:
        raise VerificationError("replacer success probability {0:.12g} differs from 1/M = "
                                "{1:.12g}".format(p_succ, expected))
    return p_succ


def feedback_bound_check(protocol, channel, alpha, information=None, seeds=None, tol=1e-5):
    """
    ``alpha/(alpha-1) (1/n) log2 p_succ + (1/n) log2 M <= I~_alpha(N)``.

    ``information`` may carry a precomputed ``I~_alpha(N)``.
    """
    if not alpha > 1:
        raise DomainError("the bound is checked for alpha > 1")
    p_succ = run_feedback(protocol, channel)
    n = protocol.n_uses
    with np.errstate(divide='ignore'):
        lhs = (alpha / (alpha - 1) * np.log2(p_succ) / n
               + np.log2(protocol.message_count) / n)
    if information is None:
        information = channel_mutual_information(channel, alpha, seeds=seeds).value
    rhs = float(information)
    return BoundCheck(lhs, rhs, lhs <= rhs + tol)


def superdense_coding_protocol():
    """
    Two bits in one use of a qubit channel: Pauli encoding of half of a
    maximally entangled pair and a Bell measurement.
    """
    bell = maximally_entangled(2).matrix
    paulis = [PAULIS[k] for k in 'IXZY']
    encoders = [[unitary_channel(p) for p in paulis]]
    povm = [np.kron(p, np.eye(2)) @ bell @ np.kron(p, np.eye(2)).conj().T for p in paulis]
    shared = DensityOperator(bell, dims=(2, 2))
    return FeedbackProtocol(shared, encoders, [], povm)


def random_protocol(message_count, seed, n_uses=1, d=2, d_mem=1):
    """
    Protocol with a Ginibre shared state on two ``d``-level systems,
    isometry-dilated encoders and decoders, and a random POVM.  With
    ``d_mem > 1`` every encoder also writes a ``d_mem``-level sender memory
    that the next round's encoder reads.
    """
    if message_count < 1 or n_uses < 1 or d_mem < 1:
        raise DomainError("a protocol needs at least one message, one channel use and a "
                          "positive memory dimension")
    rng = rng_for(seed, 37)
    shared = random_state(d * d, rng, dims=(d, d))
    encoders = []
    for i in range(n_uses):
        dims_in = (d,) if i == 0 or d_mem == 1 else (d_mem, d)
        dims_out = (d,) if d_mem == 1 else (d_mem, d)
        encoders.append([random_channel(int(np.prod(dims_in)), int(np.prod(dims_out)),
                                        seed=rng, dims_in=dims_in, dims_out=dims_out)
                         for _ in range(message_count)])
    decoders = [random_channel(d * d, d * d, seed=rng, dims_in=(d, d), dims_out=(d, d))
                for _ in range(n_uses - 1)]
    povm = random_povm(d * d, message_count, rng)
    return FeedbackProtocol(shared, encoders, decoders, povm)
