"""
Tensor products, partial traces and the maximally entangled vector.
"""
import numpy as np

from ..exceptions import DomainError
from .operators import HermitianOperator, DensityOperator, PureState, as_matrix

__all__ = ['tensor', 'partial_trace', 'partial_trace_array', 'gamma_vector',
           'gamma_projector', 'maximally_entangled', 'normalize_keep']


def tensor(*operators):
    """
    Tensor product of operators; subsystem labels are concatenated.  The
    result is a `DensityOperator` when every factor is one.
    """
    if not operators:
        raise DomainError("tensor needs at least one operator")
    matrix = np.ones((1, 1), dtype=complex)
    dims = ()
    for op in operators:
        matrix = np.kron(matrix, as_matrix(op))
        dims = dims + tuple(getattr(op, 'dims', (as_matrix(op).shape[0],)))
    if all(isinstance(op, DensityOperator) for op in operators):
        return DensityOperator(matrix, dims=dims)
    return HermitianOperator(matrix, dims=dims)


def normalize_keep(keep, n_subsystems):
    if np.isscalar(keep):
        keep = [keep]
    keep = sorted(set(int(k) for k in keep))
    for k in keep:
        if k < 0 or k >= n_subsystems:
            raise DomainError("subsystem index {0} out of range for {1} subsystems"
                              .format(k, n_subsystems))
    return keep


def partial_trace_array(matrix, dims, keep):
    """
    Partial trace over every subsystem not in ``keep`` for a matrix with
    subsystem dimensions ``dims``.  Kept subsystems stay in their original
    order.
    """
    dims = tuple(dims)
    n = len(dims)
    keep = normalize_keep(keep, n)
    t = np.asarray(matrix).reshape(dims + dims)
    remaining = n
    for k in sorted(set(range(n)) - set(keep), reverse=True):
        t = np.trace(t, axis1=k, axis2=k + remaining)
        remaining -= 1
    d = int(np.prod([dims[k] for k in keep])) if keep else 1
    return t.reshape(d, d)


def partial_trace(operator, keep):
    """
    Reduced operator on the subsystems listed in ``keep``.

    Parameters
    ----------
    operator : HermitianOperator
    keep : int or iterable of int
        Indices into ``operator.dims``.
    """
    keep = normalize_keep(keep, operator.n_subsystems)
    reduced = partial_trace_array(operator.matrix, operator.dims, keep)
    dims = tuple(operator.dims[k] for k in keep) or (1,)
    if isinstance(operator, DensityOperator):
        return DensityOperator(reduced, dims=dims)
    return HermitianOperator(reduced, dims=dims)


def gamma_vector(d):
    """|Gamma> = sum_i e_i (x) e_i, unnormalized."""
    if d < 1:
        raise DomainError("dimension must be positive")
    return PureState(np.eye(d).ravel(), dims=(d, d), normalized=False)


def gamma_projector(d):
    """|Gamma><Gamma|, trace d."""
    return gamma_vector(d).projector()


def maximally_entangled(d):
    """The normalized maximally entangled state Gamma/d."""
    return DensityOperator(gamma_vector(d).matrix / d, dims=(d, d))
