"""
Seeded random instances.  Each function draws from its own
``numpy.random.Generator`` so nothing depends on global RNG state.
"""
import numpy as np

from ..exceptions import DomainError
from .operators import DensityOperator, PureState
from .channels import KrausChannel
from .linalg import support_power_array, dagger

__all__ = ['rng_for', 'ginibre', 'random_state', 'random_pure', 'random_unitary',
           'random_channel', 'random_povm']


def rng_for(seed, *stream):
    """Generator for ``seed``; extra integers select independent streams."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng([int(seed)] + [int(s) for s in stream])


def ginibre(rng, rows, cols):
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_state(d, seed, rank=None, dims=None):
    """Ginibre-induced mixed state, full rank unless ``rank`` is given."""
    g = ginibre(rng_for(seed), d, d if rank is None else rank)
    m = g @ g.conj().T
    return DensityOperator(m / np.trace(m).real, dims=dims)


def random_pure(d, seed, dims=None):
    g = ginibre(rng_for(seed), d, 1).ravel()
    return PureState(g / np.linalg.norm(g), dims=dims)


def random_unitary(d, seed):
    """Haar unitary from the QR decomposition of a Ginibre matrix."""
    q, r = np.linalg.qr(ginibre(rng_for(seed), d, d))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def random_channel(d_in, d_out, kraus_count=None, seed=None, dims_in=None, dims_out=None):
    """
    Channel from a random isometry V: C^{d_in} -> C^{d_out} (x) C^{k}; the
    Kraus operators are the ``d_out``-row blocks of V.  ``seed`` is required.
    """
    if seed is None:
        raise DomainError("random_channel needs a seed")
    if kraus_count is None:
        kraus_count = max(2, -(-d_in // d_out))
    if d_out * kraus_count < d_in:
        raise DomainError("{0} Kraus operators of shape ({1}, {2}) cannot be trace "
                          "preserving".format(kraus_count, d_out, d_in))
    q, r = np.linalg.qr(ginibre(rng_for(seed), d_out * kraus_count, d_in))
    kraus = q.reshape(kraus_count, d_out, d_in)
    return KrausChannel(kraus, dims_in=dims_in, dims_out=dims_out)


def random_povm(d, outcomes, seed):
    """
    POVM with ``outcomes`` elements: S^{-1/2} G_m S^{-1/2} with G_m Wishart
    and S their sum.
    """
    rng = rng_for(seed)
    elements = []
    for _ in range(outcomes):
        g = ginibre(rng, d, d)
        elements.append(g @ dagger(g))
    elements = np.array(elements)
    root = support_power_array(elements.sum(axis=0), -0.5)
    return [root @ e @ root for e in elements]
