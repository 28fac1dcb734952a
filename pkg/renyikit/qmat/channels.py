"""
Channels in Kraus form, their application to subsystems, and the channel
families used throughout the package.
"""
import numpy as np

from ..config import mycfg
from ..exceptions import DomainError
from .operators import HermitianOperator, DensityOperator, as_matrix, check_dims
from .linalg import hermitian_eig, support_mask, support_power_array

__all__ = ['KrausMap', 'KrausChannel', 'ReplacerSpec', 'apply_channel',
           'apply_kraus_array', 'as_kraus_map', 'identity_channel',
           'unitary_channel', 'dephasing_channel', 'depolarizing_channel',
           'amplitude_damping_channel', 'replacer_channel', 'thermal_state',
           'illumination_toy', 'PAULIS']

PAULIS = {
    'I': np.eye(2, dtype=complex),
    'X': np.array([[0, 1], [1, 0]], dtype=complex),
    'Y': np.array([[0, -1j], [1j, 0]], dtype=complex),
    'Z': np.array([[1, 0], [0, -1]], dtype=complex),
}


class KrausMap(object):
    """
    A completely positive map X -> sum_k K_k X K_k^dagger.

    Parameters
    ----------
    kraus : sequence of array_like
        Kraus operators, all of shape ``(dim_out, dim_in)``.
    dims_in, dims_out : sequence of int, optional
        Subsystem structure of the input and output spaces.  When the map is
        applied to a block of subsystems, the block's labels are replaced by
        ``dims_out``.
    """

    def __init__(self, kraus, dims_in=None, dims_out=None):
        ops = [np.array(k, dtype=complex) for k in kraus]
        if not ops:
            raise DomainError("a Kraus map needs at least one operator")
        shape = ops[0].shape
        if len(shape) != 2 or any(k.shape != shape for k in ops):
            raise DomainError("Kraus operators must be matrices of a common shape")
        stacked = np.stack(ops)
        if not np.all(np.isfinite(stacked)):
            raise DomainError("Kraus operators have non-finite entries")
        stacked.setflags(write=False)
        self._kraus = stacked
        self._dims_in = check_dims((shape[1],) if dims_in is None else dims_in, shape[1])
        self._dims_out = check_dims((shape[0],) if dims_out is None else dims_out, shape[0])

    @property
    def kraus(self):
        return self._kraus

    @property
    def dim_in(self):
        return self._kraus.shape[2]

    @property
    def dim_out(self):
        return self._kraus.shape[1]

    @property
    def dims_in(self):
        return self._dims_in

    @property
    def dims_out(self):
        return self._dims_out

    def __len__(self):
        return self._kraus.shape[0]

    def __call__(self, operator, acting_on=None):
        return apply_channel(self, operator, acting_on=acting_on)

    def apply_array(self, matrix):
        """Apply to a stack of matrices on the full input space."""
        k = self._kraus
        return np.einsum('kai,...ij,kbj->...ab', k, matrix, k.conj())

    def choi(self):
        """
        (id (x) N)(Gamma) on A' (x) B as an array, with Gamma the
        unnormalized maximally entangled projector.
        """
        vectors = np.transpose(self._kraus, (0, 2, 1)).reshape(len(self), -1)
        return np.einsum('ki,kj->ij', vectors, vectors.conj())

    def conjugated(self, x):
        """Theta_X o N, i.e. Kraus operators X^{1/2} K_k."""
        root = support_power_array(as_matrix(x), 0.5)
        if root.shape[0] != self.dim_out:
            raise DomainError("conjugating operator has dimension {0}, map outputs {1}"
                              .format(root.shape[0], self.dim_out))
        return KrausMap(root @ self._kraus, dims_in=self._dims_in, dims_out=self._dims_out)

    def trace_preserving_residual(self):
        total = np.einsum('kai,kaj->ij', self._kraus.conj(), self._kraus)
        return float(np.max(np.abs(total - np.eye(self.dim_in))))

    def __repr__(self):
        return "{0}(dims_in={1}, dims_out={2}, kraus_count={3})".format(
            type(self).__name__, self._dims_in, self._dims_out, len(self))


class KrausChannel(KrausMap):
    """
    A completely positive trace-preserving map; construction fails when
    ``sum K^dagger K`` differs from the identity by more than ``tp_tol``.
    """

    def __init__(self, kraus, dims_in=None, dims_out=None, tp_tol=None):
        super(KrausChannel, self).__init__(kraus, dims_in=dims_in, dims_out=dims_out)
        if tp_tol is None:
            tp_tol = mycfg.tp_tol
        residual = self.trace_preserving_residual()
        if residual > tp_tol:
            raise DomainError("Kraus operators are not trace preserving "
                              "(residual {0:g})".format(residual))


class ReplacerSpec(object):
    """
    The replacer channel R_sigma(X) = Tr(X) sigma, described by its output
    state alone.
    """

    def __init__(self, sigma):
        if not isinstance(sigma, DensityOperator):
            sigma = DensityOperator(as_matrix(sigma))
        self.sigma = sigma

    @property
    def dim_out(self):
        return self.sigma.dim

    def channel(self, dim_in, dims_in=None):
        return replacer_channel(self.sigma, dim_in, dims_in=dims_in)

    def __repr__(self):
        return "ReplacerSpec(dim_out={0})".format(self.dim_out)


def as_kraus_map(channel, dim_in):
    """Kraus form of a channel or of a `ReplacerSpec` on a ``dim_in`` input."""
    if isinstance(channel, ReplacerSpec):
        return channel.channel(dim_in)
    if isinstance(channel, KrausMap):
        return channel
    raise DomainError("expected a KrausMap or ReplacerSpec, got {0!r}".format(channel))


def _block(dims, acting_on):
    if acting_on is None:
        return tuple(range(len(dims)))
    if np.isscalar(acting_on):
        acting_on = (acting_on,)
    block = tuple(int(k) for k in acting_on)
    if not block or any(k < 0 or k >= len(dims) for k in block):
        raise DomainError("subsystem indices {0} out of range for dims {1}"
                          .format(block, dims))
    if block != tuple(range(block[0], block[0] + len(block))):
        raise DomainError("channels act on a contiguous block of subsystems, got {0}"
                          .format(block))
    return block


def apply_kraus_array(kraus, matrix, dims, acting_on=None, dims_out=None):
    """
    Apply Kraus operators of shape ``(k, d_out, d_in)`` to the contiguous
    block ``acting_on`` of ``matrix``; returns ``(matrix, dims)``.
    """
    dims = tuple(dims)
    block = _block(dims, acting_on)
    left = int(np.prod(dims[:block[0]]))
    mid = int(np.prod([dims[k] for k in block]))
    right = int(np.prod(dims[block[-1] + 1:]))
    d_out, d_in = kraus.shape[1], kraus.shape[2]
    if mid != d_in:
        raise DomainError("channel input dimension {0} does not match subsystems {1} "
                          "of dimension {2}".format(d_in, block, mid))
    m6 = np.asarray(matrix).reshape(left, mid, right, left, mid, right)
    out = np.einsum('kai,xiyzjw,kbj->xayzbw', kraus, m6, kraus.conj())
    size = left * d_out * right
    if dims_out is None:
        dims_out = (d_out,)
    new_dims = dims[:block[0]] + tuple(dims_out) + dims[block[-1] + 1:]
    return out.reshape(size, size), new_dims


def apply_channel(channel, operator, acting_on=None):
    """
    (id (x) N (x) id)(H) with N acting on the subsystem(s) ``acting_on``.

    Parameters
    ----------
    channel : KrausMap
    operator : HermitianOperator
    acting_on : int, sequence of int or None
        A subsystem index or a contiguous block of them; ``None`` means the
        whole operator.

    Returns
    -------
    HermitianOperator
        A `DensityOperator` when ``operator`` is a state and ``channel`` is
        trace preserving.
    """
    dims = operator.dims if isinstance(operator, HermitianOperator) else None
    m = as_matrix(operator)
    if dims is None:
        dims = (m.shape[0],)
    out, new_dims = apply_kraus_array(channel.kraus, m, dims, acting_on=acting_on,
                                      dims_out=channel.dims_out)
    if isinstance(operator, DensityOperator) and isinstance(channel, KrausChannel):
        return DensityOperator(out, dims=new_dims,
                               trace_tol=max(mycfg.trace_tol, 2 * mycfg.tp_tol))
    return HermitianOperator(out, dims=new_dims)


def identity_channel(d):
    return KrausChannel([np.eye(d)])


def unitary_channel(u, dims_out=None):
    return KrausChannel([u], dims_out=dims_out)


def dephasing_channel(p, d=2):
    """
    rho -> (1-p) rho + p Delta(rho) with Delta the completely dephasing map
    in the computational basis.
    """
    if not 0 <= p <= 1:
        raise DomainError("dephasing probability must lie in [0, 1]")
    kraus = [np.sqrt(1 - p) * np.eye(d)]
    for i in range(d):
        proj = np.zeros((d, d))
        proj[i, i] = 1
        kraus.append(np.sqrt(p) * proj)
    return KrausChannel(kraus)


def depolarizing_channel(p, d=2):
    """rho -> (1-p) rho + p Tr(rho) I/d."""
    if not 0 <= p <= 1:
        raise DomainError("depolarizing probability must lie in [0, 1]")
    kraus = [np.sqrt(1 - p) * np.eye(d)]
    for i in range(d):
        for j in range(d):
            unit = np.zeros((d, d))
            unit[i, j] = 1
            kraus.append(np.sqrt(p / d) * unit)
    return KrausChannel(kraus)


def amplitude_damping_channel(gamma):
    if not 0 <= gamma <= 1:
        raise DomainError("damping parameter must lie in [0, 1]")
    return KrausChannel([[[1, 0], [0, np.sqrt(1 - gamma)]],
                         [[0, np.sqrt(gamma)], [0, 0]]])


def replacer_channel(sigma, dim_in, dims_in=None):
    """
    R_sigma(X) = Tr(X) sigma with Kraus operators sqrt(l_j)|v_j><k|.
    """
    m = as_matrix(sigma)
    w, v = hermitian_eig(m)
    mask = support_mask(w)
    kraus = []
    for j in np.flatnonzero(mask):
        for k in range(dim_in):
            op = np.zeros((m.shape[0], dim_in), dtype=complex)
            op[:, k] = np.sqrt(w[j]) * v[:, j]
            kraus.append(op)
    return KrausChannel(kraus, dims_in=dims_in,
                        dims_out=getattr(sigma, 'dims', None))


def thermal_state(thermal_mix):
    """(1 - mix)|0><0| + mix I/2."""
    if not 0 <= thermal_mix <= 1:
        raise DomainError("thermal mixing must lie in [0, 1]")
    return DensityOperator(np.diag([1 - thermal_mix / 2, thermal_mix / 2]))


def illumination_toy(eta, thermal_mix):
    """
    Qubit illumination model.  With the object present the probe survives
    with probability ``eta`` and is otherwise replaced by thermal
    background; with the object absent only background returns.

    Returns
    -------
    channel : KrausChannel
        eta * id + (1 - eta) * R_theta, the null hypothesis.
    replacer : ReplacerSpec
        R_theta, the alternative.
    """
    if not 0 <= eta <= 1:
        raise DomainError("transmissivity must lie in [0, 1]")
    theta = thermal_state(thermal_mix)
    background = replacer_channel(theta, 2).kraus
    kraus = [np.sqrt(eta) * np.eye(2)] + [np.sqrt(1 - eta) * k for k in background]
    return KrausChannel(kraus), ReplacerSpec(theta)
