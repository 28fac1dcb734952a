"""
Operator types.  Matrices are dense complex ``numpy`` arrays stored
read-only, and every operator carries the dimensions of its subsystems
(``dims``) so that tensor products and partial traces never need index
arithmetic from the caller.
"""
import numpy as np

from ..config import mycfg
from ..exceptions import DomainError

__all__ = ['HermitianOperator', 'DensityOperator', 'PureState', 'as_matrix',
           'check_dims']


def as_matrix(obj):
    """
    Return the complex matrix behind an operator, or ``obj`` itself as a
    complex array.
    """
    if isinstance(obj, (HermitianOperator, PureState)):
        return obj.matrix
    return np.asarray(obj, dtype=complex)


def check_dims(dims, dim):
    dims = tuple(int(d) for d in dims)
    if len(dims) == 0 or any(d < 1 for d in dims):
        raise DomainError("subsystem dimensions must be positive, got {0}".format(dims))
    if int(np.prod(dims)) != dim:
        raise DomainError("subsystem dimensions {0} do not multiply to {1}"
                          .format(dims, dim))
    return dims


def _frozen(array):
    array = np.array(array, dtype=complex)
    array.setflags(write=False)
    return array


class HermitianOperator(object):
    """
    A Hermitian matrix with subsystem labels.

    Parameters
    ----------
    matrix : array_like
        Square complex matrix.  It is symmetrized after the hermiticity
        check so later eigendecompositions see an exactly Hermitian input.
    dims : sequence of int, optional
        Subsystem dimensions, product equal to the matrix dimension.
        Defaults to a single system.
    hermiticity_tol : float, optional
        Largest tolerated entry of ``M - M^dagger``.
    """

    def __init__(self, matrix, dims=None, hermiticity_tol=None):
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise DomainError("expected a non-empty square matrix, got shape {0}"
                              .format(m.shape))
        if not np.all(np.isfinite(m)):
            raise DomainError("matrix has non-finite entries")
        if hermiticity_tol is None:
            hermiticity_tol = mycfg.hermiticity_tol
        skew = np.max(np.abs(m - m.conj().T))
        if skew > hermiticity_tol:
            raise DomainError("matrix is not Hermitian (max |M - M^dagger| = {0:g})"
                              .format(skew))
        self._matrix = _frozen(0.5 * (m + m.conj().T))
        self._dims = check_dims((m.shape[0],) if dims is None else dims, m.shape[0])

    @property
    def matrix(self):
        return self._matrix

    @property
    def dim(self):
        return self._matrix.shape[0]

    @property
    def dims(self):
        return self._dims

    @property
    def n_subsystems(self):
        return len(self._dims)

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._matrix
        return self._matrix.astype(dtype)

    def trace(self):
        return float(np.trace(self._matrix).real)

    def eigvalsh(self):
        return np.linalg.eigvalsh(self._matrix)

    def with_dims(self, dims):
        """Same matrix, new subsystem labels."""
        return type(self)(self._matrix, dims=dims)

    def allclose(self, other, atol=1e-10):
        return np.allclose(self._matrix, as_matrix(other), atol=atol, rtol=0)

    def _combine(self, other, sign):
        if isinstance(other, HermitianOperator) and other.dims != self.dims:
            raise DomainError("subsystem dimensions differ: {0} vs {1}"
                              .format(self.dims, other.dims))
        return HermitianOperator(self._matrix + sign * as_matrix(other), dims=self.dims)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, scalar):
        if not np.isreal(scalar):
            raise DomainError("Hermitian operators can only be scaled by real numbers")
        return HermitianOperator(float(np.real(scalar)) * self._matrix, dims=self.dims)

    __rmul__ = __mul__

    def __repr__(self):
        return "{0}(dims={1})\n{2}".format(type(self).__name__, self.dims, self._matrix)


class DensityOperator(HermitianOperator):
    """
    A positive semidefinite, unit-trace Hermitian operator.
    """

    def __init__(self, matrix, dims=None, hermiticity_tol=None, psd_tol=None,
                 trace_tol=None):
        super(DensityOperator, self).__init__(matrix, dims=dims,
                                              hermiticity_tol=hermiticity_tol)
        if psd_tol is None:
            psd_tol = mycfg.psd_tol
        if trace_tol is None:
            trace_tol = mycfg.trace_tol
        lowest = self.eigvalsh()[0]
        if lowest < -psd_tol:
            raise DomainError("state has negative eigenvalue {0:g}".format(lowest))
        tr = self.trace()
        if abs(tr - 1) > trace_tol:
            raise DomainError("state has trace {0!r}, expected 1".format(tr))

    @classmethod
    def from_operator(cls, operator, **kwargs):
        return cls(as_matrix(operator), dims=getattr(operator, 'dims', None), **kwargs)

    @classmethod
    def maximally_mixed(cls, dim, dims=None):
        return cls(np.eye(dim) / dim, dims=dims)

    @classmethod
    def normalized(cls, matrix, dims=None):
        """Rescale a PSD matrix to unit trace."""
        m = np.asarray(matrix, dtype=complex)
        return cls(m / np.trace(m).real, dims=dims)

    def with_dims(self, dims):
        return DensityOperator(self._matrix, dims=dims)


class PureState(object):
    """
    A state vector with subsystem labels.

    ``normalized=False`` marks vectors that are deliberately not unit norm,
    such as the unnormalized maximally entangled vector.
    """

    def __init__(self, amplitudes, dims=None, normalized=True, pure_tol=None):
        v = np.array(amplitudes, dtype=complex).ravel()
        if v.size == 0 or not np.all(np.isfinite(v)):
            raise DomainError("amplitudes must be a non-empty finite vector")
        if pure_tol is None:
            pure_tol = mycfg.pure_tol
        if normalized and abs(np.linalg.norm(v) - 1) > pure_tol:
            raise DomainError("state vector has norm {0!r}".format(np.linalg.norm(v)))
        self._amplitudes = _frozen(v)
        self._dims = check_dims((v.size,) if dims is None else dims, v.size)
        self.normalized = normalized

    @classmethod
    def from_unnormalized(cls, amplitudes, dims=None):
        v = np.asarray(amplitudes, dtype=complex).ravel()
        return cls(v / np.linalg.norm(v), dims=dims)

    @property
    def amplitudes(self):
        return self._amplitudes

    @property
    def dim(self):
        return self._amplitudes.size

    @property
    def dims(self):
        return self._dims

    @property
    def matrix(self):
        return np.outer(self._amplitudes, self._amplitudes.conj())

    def amplitude_matrix(self):
        """
        Amplitudes reshaped so that the first subsystem indexes rows and the
        remaining subsystems index columns: |psi> = (Z (x) I)|Gamma>.
        """
        return self._amplitudes.reshape(self._dims[0], self.dim // self._dims[0])

    def projector(self):
        if self.normalized:
            return DensityOperator(self.matrix, dims=self._dims)
        return HermitianOperator(self.matrix, dims=self._dims)

    def __repr__(self):
        return "PureState(dims={0}, normalized={1})\n{2}".format(
            self._dims, self.normalized, self._amplitudes)
