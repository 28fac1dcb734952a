"""
Relative entropy and the Petz and sandwiched Renyi divergences, in bits.

All quantities are computed from eigendecompositions in the log domain, so
large Renyi orders do not overflow.  The ``*_array`` functions accept stacks
of matrices of shape ``(..., d, d)`` and return arrays; the public functions
take operators and return `DivergenceValue`.

Support conventions: the divergence is ``inf`` when supp(rho) is not
contained in supp(sigma) (relative entropy, and Renyi orders above one) or
when rho and sigma are orthogonal (any order).  The first argument may be
subnormalized; Renyi quantities carry the ``1/Tr(rho)`` prefactor and the
relative entropy is normalized the same way, so it stays the alpha -> 1
limit of both families.
"""
import numpy as np
from scipy.special import logsumexp

from ..config import mycfg, ConfigDescriptor
from ..exceptions import DomainError
from ..qmat.operators import as_matrix
from ..qmat.linalg import (hermitian_eig, support_mask, check_psd, dagger,
                           schatten_from_values)
from .values import DivergenceValue

__all__ = ['relative_entropy', 'petz_renyi', 'sandwiched_renyi', 'max_relative_entropy',
           'renyi_auto', 'divergence_array', 'relative_entropy_array',
           'petz_renyi_array', 'sandwiched_renyi_array', 'FAMILIES']

FAMILIES = ('petz', 'sandwiched')

LN2 = np.log(2.0)


def _masked_log(w, mask):
    return np.where(mask, np.log(np.where(mask, w, 1.0)), -np.inf)


class _Pair(object):
    """
    Joint spectral data of a (rho, sigma) stack.

    ``contained`` compares support projectors: ``Tr P_rho (1 - P_sigma)``
    must not exceed ``support_tol``, whatever weight rho puts on the
    leaking directions.
    """

    def __init__(self, rho, sigma, cutoff=None, support_tol=None, check=False):
        if support_tol is None:
            support_tol = mycfg.support_tol
        self.wr, self.vr = hermitian_eig(rho)
        self.ws, self.vs = hermitian_eig(sigma)
        if check:
            check_psd(self.wr)
            check_psd(self.ws)
        self.mr = support_mask(self.wr, cutoff)
        self.ms = support_mask(self.ws, cutoff)
        self.overlap = np.abs(dagger(self.vr) @ self.vs) ** 2
        weights = np.where(self.mr, self.wr, 0.0)
        self.trace = weights.sum(axis=-1)
        leak = np.einsum('...ij->...', self.overlap *
                         (self.mr[..., :, None] & ~self.ms[..., None, :]))
        self.contained = leak <= support_tol
        shared = np.einsum('...ij->...', self.overlap *
                           (self.mr[..., :, None] & self.ms[..., None, :]))
        self.orthogonal = shared <= support_tol


def relative_entropy_array(rho, sigma, cutoff=None, support_tol=None, check=False):
    pair = _Pair(rho, sigma, cutoff, support_tol, check)
    log_r = np.where(pair.mr, np.log2(np.where(pair.mr, pair.wr, 1.0)), 0.0)
    log_s = np.where(pair.ms, np.log2(np.where(pair.ms, pair.ws, 1.0)), 0.0)
    weights = np.where(pair.mr, pair.wr, 0.0)
    own = np.sum(weights * log_r, axis=-1)
    cross = np.einsum('...i,...ij,...j->...', weights, pair.overlap, log_s)
    with np.errstate(divide='ignore', invalid='ignore'):
        value = (own - cross) / pair.trace
    return np.where(pair.contained, value, np.inf)


def petz_renyi_array(rho, sigma, alpha, cutoff=None, support_tol=None, check=False):
    pair = _Pair(rho, sigma, cutoff, support_tol, check)
    with np.errstate(divide='ignore', invalid='ignore'):
        la = np.where(pair.mr, alpha * _masked_log(pair.wr, pair.mr), -np.inf)
        lb = np.where(pair.ms, (1 - alpha) * _masked_log(pair.ws, pair.ms), -np.inf)
        lo = np.log(pair.overlap)
        terms = la[..., :, None] + lb[..., None, :] + lo
        log_q = logsumexp(terms.reshape(terms.shape[:-2] + (-1,)), axis=-1)
        value = (log_q - np.log(pair.trace)) / ((alpha - 1) * LN2)
    infinite = pair.orthogonal | (~pair.contained & (alpha > 1))
    return np.where(infinite, np.inf, value)


def _sandwich(pair, rho, alpha):
    t = (1 - alpha) / (2 * alpha) if np.isfinite(alpha) else -0.5
    safe = np.where(pair.ms, pair.ws, 1.0)
    powers = np.where(pair.ms, safe ** t, 0.0)
    root = (pair.vs * powers[..., None, :]) @ dagger(pair.vs)
    x = root @ np.asarray(rho, dtype=complex) @ root
    return 0.5 * (x + dagger(x))


def sandwiched_renyi_array(rho, sigma, alpha, cutoff=None, support_tol=None,
                           check=False, method='trace'):
    """
    Batched sandwiched Renyi divergence.  ``alpha = inf`` gives the
    max-relative entropy.  ``method='norm'`` evaluates the Schatten norm
    form through singular values instead of the eigenvalue trace.
    """
    pair = _Pair(rho, sigma, cutoff, support_tol, check)
    x = _sandwich(pair, rho, alpha)
    with np.errstate(divide='ignore', invalid='ignore'):
        if np.isinf(alpha):
            top = np.linalg.eigvalsh(x)[..., -1]
            value = np.log2(top)
        elif method == 'norm':
            s = np.linalg.svd(x, compute_uv=False)
            norm = schatten_from_values(s, alpha)
            value = (alpha / (alpha - 1) * np.log2(norm)
                     - np.log2(pair.trace) / (alpha - 1))
        else:
            ev = np.linalg.eigvalsh(x)
            mask = support_mask(ev, cutoff)
            log_q = logsumexp(np.where(mask, alpha * _masked_log(ev, mask), -np.inf),
                              axis=-1)
            value = (log_q - np.log(pair.trace)) / ((alpha - 1) * LN2)
    infinite = pair.orthogonal | (~pair.contained & (alpha > 1))
    return np.where(infinite, np.inf, value)


def divergence_array(rho, sigma, alpha, family='sandwiched', cutoff=None,
                     support_tol=None):
    """
    Dispatch on family with the alpha = 1 splice: inside
    ``alpha_one_window`` of one the relative entropy is returned.
    """
    if abs(alpha - 1) < mycfg.alpha_one_window:
        return relative_entropy_array(rho, sigma, cutoff, support_tol)
    if family == 'sandwiched':
        return sandwiched_renyi_array(rho, sigma, alpha, cutoff, support_tol)
    elif family == 'petz':
        return petz_renyi_array(rho, sigma, alpha, cutoff, support_tol)
    raise DomainError("unknown divergence family {0!r}; expected one of {1}"
                      .format(family, FAMILIES))


def _pair_matrices(rho, sigma):
    r = as_matrix(rho)
    s = as_matrix(sigma)
    if r.ndim != 2 or r.shape != s.shape:
        raise DomainError("states have different dimensions: {0} vs {1}"
                          .format(r.shape, s.shape))
    return r, s


def _scalar(value):
    return DivergenceValue(float(np.asarray(value)))


@ConfigDescriptor
def relative_entropy(rho, sigma, support_cutoff=None, support_tol=None):
    """
    Umegaki relative entropy D(rho||sigma) = Tr rho (log rho - log sigma)
    in bits; ``inf`` unless supp(rho) is inside supp(sigma).
    """
    r, s = _pair_matrices(rho, sigma)
    return _scalar(relative_entropy_array(r, s, support_cutoff, support_tol, check=True))


@ConfigDescriptor
def petz_renyi(rho, sigma, alpha, support_cutoff=None, support_tol=None):
    """
    Petz Renyi divergence
    ``1/(alpha-1) log2[(1/Tr rho) Tr rho^alpha sigma^(1-alpha)]``
    for alpha in [0, 1) or (1, inf).
    """
    if alpha == 1:
        raise DomainError("alpha = 1 is the relative entropy; use relative_entropy")
    if not 0 <= alpha < np.inf:
        raise DomainError("Petz order must lie in [0, 1) or (1, inf), got {0}".format(alpha))
    r, s = _pair_matrices(rho, sigma)
    return _scalar(petz_renyi_array(r, s, alpha, support_cutoff, support_tol, check=True))


@ConfigDescriptor
def sandwiched_renyi(rho, sigma, alpha, method='trace', support_cutoff=None,
                     support_tol=None):
    """
    Sandwiched Renyi divergence
    ``1/(alpha-1) log2[(1/Tr rho) Tr (sigma^t rho sigma^t)^alpha]`` with
    ``t = (1-alpha)/(2 alpha)``.

    Parameters
    ----------
    rho, sigma : DensityOperator or array_like
    alpha : float
        In (0, 1) or (1, inf]; ``inf`` gives the max-relative entropy.
    method : {'trace', 'norm'}
        Evaluate the trace of the alpha-th power from eigenvalues, or the
        equivalent Schatten norm form from singular values.
    """
    if alpha == 1:
        raise DomainError("alpha = 1 is the relative entropy; use relative_entropy")
    if not alpha > 0:
        raise DomainError("sandwiched order must be positive, got {0}".format(alpha))
    r, s = _pair_matrices(rho, sigma)
    return _scalar(sandwiched_renyi_array(r, s, alpha, support_cutoff, support_tol,
                                          check=True, method=method))


def max_relative_entropy(rho, sigma):
    """log2 min{lambda : rho <= lambda sigma}."""
    return sandwiched_renyi(rho, sigma, np.inf)


@ConfigDescriptor
def renyi_auto(rho, sigma, alpha, family='sandwiched', alpha_one_window=None):
    """
    Renyi divergence of either family, continuous through alpha = 1.
    """
    if family not in FAMILIES:
        raise DomainError("unknown divergence family {0!r}; expected one of {1}"
                          .format(family, FAMILIES))
    if abs(alpha - 1) < alpha_one_window:
        return relative_entropy(rho, sigma)
    if family == 'petz':
        return petz_renyi(rho, sigma, alpha)
    return sandwiched_renyi(rho, sigma, alpha)
