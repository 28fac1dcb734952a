"""
Matrix functions on the support of positive semidefinite operators.

Every function here routes through one kernel, ``hermitian_eig``, and works
on stacks of matrices (arrays of shape ``(..., d, d)``) as well as on single
operators.  The ``*_array`` variants are the batched workhorses used by the
optimizers; the public wrappers accept operators and return operators of the
same kind.
"""
import numpy as np

from ..config import mycfg, ConfigDescriptor
from ..exceptions import DomainError
from .operators import HermitianOperator, as_matrix

__all__ = ['hermitian_eig', 'dagger', 'support_mask', 'support_power',
           'support_power_array', 'support_log2_array', 'schatten_norm',
           'schatten_from_values', 'conjugate_by', 'kron_array']


def dagger(m):
    return np.conj(np.swapaxes(m, -1, -2))


def hermitian_eig(matrix):
    """
    Eigendecomposition of the Hermitian part of ``matrix`` (LAPACK ``heevd``
    through ``numpy.linalg.eigh``); eigenvalues ascending.
    """
    m = np.asarray(matrix, dtype=complex)
    return np.linalg.eigh(0.5 * (m + dagger(m)))


def support_mask(eigenvalues, cutoff=None):
    """
    True for eigenvalues counted as part of the support: strictly above
    ``cutoff`` times the largest eigenvalue.
    """
    if cutoff is None:
        cutoff = mycfg.support_cutoff
    top = np.max(eigenvalues, axis=-1, keepdims=True)
    return eigenvalues > cutoff * np.maximum(top, 0.0)


def check_psd(eigenvalues, psd_tol=None):
    if psd_tol is None:
        psd_tol = mycfg.psd_tol
    scale = np.maximum(1.0, np.max(np.abs(eigenvalues), axis=-1))
    lowest = np.min(eigenvalues, axis=-1)
    if np.any(lowest < -psd_tol * scale):
        raise DomainError("operator is not positive semidefinite "
                          "(eigenvalue {0:g})".format(float(np.min(lowest))))


def _support_powers(eigenvalues, mask, t):
    safe = np.where(mask, eigenvalues, 1.0)
    return np.where(mask, safe ** t, 0.0)


def support_power_array(matrix, t, cutoff=None, psd_tol=None, check=True):
    """
    ``sum_{x_i > cutoff} x_i^t P_i`` for a stack of PSD matrices.
    ``t = 0`` gives the support projector; negative ``t`` a pseudo-inverse
    power.
    """
    w, v = hermitian_eig(matrix)
    if check:
        check_psd(w, psd_tol)
    p = _support_powers(w, support_mask(w, cutoff), t)
    return (v * p[..., None, :]) @ dagger(v)


def support_log2_array(matrix, cutoff=None):
    """Base-two logarithm on the support, zero on the kernel."""
    w, v = hermitian_eig(matrix)
    mask = support_mask(w, cutoff)
    logs = np.where(mask, np.log2(np.where(mask, w, 1.0)), 0.0)
    return (v * logs[..., None, :]) @ dagger(v)


def _like(template, matrix):
    if isinstance(template, HermitianOperator):
        return HermitianOperator(matrix, dims=template.dims)
    return matrix


@ConfigDescriptor
def support_power(operator, t, support_cutoff=None, psd_tol=None):
    """
    Power of a positive semidefinite operator taken on its support only.

    Parameters
    ----------
    operator : HermitianOperator or array_like
    t : float
    support_cutoff : float, optional
        Relative cutoff; eigenvalues at or below ``support_cutoff * lambda_max``
        count as zero.
    psd_tol : float, optional
        Eigenvalues below ``-psd_tol`` raise `DomainError`.

    Returns
    -------
    Same kind as ``operator``.
    """
    m = as_matrix(operator)
    return _like(operator, support_power_array(m, t, cutoff=support_cutoff,
                                               psd_tol=psd_tol))


def schatten_from_values(singular_values, alpha):
    """
    ``(sum s^alpha)^(1/alpha)`` along the last axis, scaled by the largest
    value first so large alpha does not overflow.
    """
    s = np.asarray(singular_values, dtype=float)
    s = np.where(s > 0, s, 0.0)
    top = np.max(s, axis=-1)
    if np.isinf(alpha):
        return top
    safe_top = np.where(top > 0, top, 1.0)
    ratio = s / safe_top[..., None]
    return top * np.sum(ratio ** alpha, axis=-1) ** (1.0 / alpha)


def schatten_norm(matrix, alpha):
    """
    Schatten alpha-norm.  For ``0 < alpha < 1`` the same formula gives the
    Schatten quasi-norm.  ``alpha = inf`` is the operator norm.
    """
    if not alpha > 0:
        raise DomainError("Schatten index must be positive, got {0}".format(alpha))
    s = np.linalg.svd(as_matrix(matrix), compute_uv=False)
    value = schatten_from_values(s, alpha)
    return float(value) if np.ndim(value) == 0 else value


def conjugate_by(x, y):
    """
    Theta_X(Y) = X^{1/2} Y X^{1/2}, with the square root taken on the
    support of X.
    """
    root = support_power_array(as_matrix(x), 0.5)
    out = root @ as_matrix(y) @ root
    return _like(y, out)


def kron_array(a, b):
    """Kronecker product broadcast over leading stack axes."""
    a = np.asarray(a)
    b = np.asarray(b)
    out = np.einsum('...ij,...kl->...ikjl', a, b)
    shape = out.shape[:-4] + (a.shape[-2] * b.shape[-2], a.shape[-1] * b.shape[-1])
    return out.reshape(shape)
