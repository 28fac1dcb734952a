"""
Channel divergences as functions of an input state on A'.

For an input ``rho`` on A' the entangled probe with that marginal gives the
output ``omega_N(rho) = (rho^1/2 (x) I) N(Gamma) (rho^1/2 (x) I)`` on A'B,
so every optimization over probe states ``psi_RA`` becomes one over density
matrices of the input dimension.
"""
import numpy as np

from ..exceptions import DomainError
from ..qmat.operators import PureState, as_matrix
from ..qmat.linalg import support_power_array, kron_array, schatten_from_values
from ..qmat.channels import KrausMap, ReplacerSpec, as_kraus_map, apply_kraus_array
from ..qmat.subsystems import partial_trace_array
from ..divergences.renyi import divergence_array, sandwiched_renyi_array, FAMILIES

__all__ = ['ChannelDivergenceQuery', 'outside_certified_range', 'induced_state_array',
           'probe_output', 'state_parameterization_identity', 'norm_chain_identity']


def outside_certified_range(alpha, family):
    """True outside the orders where the channel objective is quasi-concave in rho."""
    if family == 'sandwiched':
        return alpha < 0.5
    return alpha > 2


def induced_state_array(choi, rhos, d_out):
    """``omega(rho)`` for a stack of input states ``rhos``."""
    root = support_power_array(rhos, 0.5, check=False)
    lift = kron_array(root, np.eye(d_out))
    return lift @ choi @ lift


def probe_output(channel, psi):
    """``(id_R (x) N)(psi)`` for a pure probe with ``psi.dims == (d_R, d_A)``."""
    out, _ = apply_kraus_array(channel.kraus, psi.matrix, psi.dims, acting_on=1,
                               dims_out=(channel.dim_out,))
    return out


def _input_state(psi):
    """The state ``Z^dagger Z`` on A' induced by amplitudes ``psi = (Z (x) I)|Gamma>``."""
    z = psi.amplitude_matrix()
    return z.conj().T @ z


class ChannelDivergenceQuery(object):
    """
    A pair of channels compared at Renyi order ``alpha``.

    Parameters
    ----------
    channel_1 : KrausChannel
    channel_2 : KrausChannel or ReplacerSpec
    alpha : float
        ``1`` selects the relative entropy; ``inf`` the max-relative entropy
        (sandwiched family only).
    family : {'petz', 'sandwiched'}
    """

    def __init__(self, channel_1, channel_2, alpha, family='sandwiched'):
        if family not in FAMILIES:
            raise DomainError("unknown divergence family {0!r}; expected one of {1}"
                              .format(family, FAMILIES))
        if not isinstance(channel_1, KrausMap):
            raise DomainError("first channel must be given in Kraus form")
        if np.isinf(alpha) and family == 'petz':
            raise DomainError("the Petz family is not defined at alpha = inf")
        if not alpha >= 0 or (family == 'sandwiched' and alpha == 0):
            raise DomainError("invalid Renyi order {0} for the {1} family".format(alpha, family))
        self.replacer = channel_2 if isinstance(channel_2, ReplacerSpec) else None
        channel_2 = as_kraus_map(channel_2, channel_1.dim_in)
        if (channel_1.dim_in, channel_1.dim_out) != (channel_2.dim_in, channel_2.dim_out):
            raise DomainError("channels map {0} -> {1} and {2} -> {3}".format(
                channel_1.dim_in, channel_1.dim_out, channel_2.dim_in, channel_2.dim_out))
        self.channel_1 = channel_1
        self.channel_2 = channel_2
        self.alpha = alpha
        self.family = family
        self._choi_1 = channel_1.choi()
        self._choi_2 = channel_2.choi()

    @property
    def dim_in(self):
        return self.channel_1.dim_in

    @property
    def dim_out(self):
        return self.channel_1.dim_out

    @property
    def heuristic(self):
        return outside_certified_range(self.alpha, self.family)

    def objective_array(self, rhos):
        omega_1 = induced_state_array(self._choi_1, rhos, self.dim_out)
        omega_2 = induced_state_array(self._choi_2, rhos, self.dim_out)
        return divergence_array(omega_1, omega_2, self.alpha, self.family)

    def objective(self, rho):
        return float(self.objective_array(as_matrix(rho)))

    def __repr__(self):
        return ("ChannelDivergenceQuery(dims={0}->{1}, alpha={2}, family={3!r})"
                .format(self.dim_in, self.dim_out, self.alpha, self.family))


def state_parameterization_identity(channel_1, channel_2, psi, alpha, family='sandwiched'):
    """
    Both sides of the probe-to-input reduction for one pure probe.

    Returns
    -------
    direct : float
        ``D_alpha((id (x) N1)(psi) || (id (x) N2)(psi))``.
    reduced : float
        The same divergence of ``omega_Ni(Z^dagger Z)``.
    """
    if not isinstance(psi, PureState):
        psi = PureState(psi)
    query = ChannelDivergenceQuery(channel_1, channel_2, alpha, family)
    direct = divergence_array(probe_output(query.channel_1, psi),
                              probe_output(query.channel_2, psi), alpha, family)
    return float(direct), query.objective(_input_state(psi))


def norm_chain_identity(channel, sigma, psi, alpha):
    """
    Both sides of the Schatten-norm form of the replacer divergence for one
    pure probe.

    Returns
    -------
    direct : float
        ``D~_alpha((id (x) N)(psi) || psi_R (x) sigma)``.
    chained : float
        ``alpha/(alpha-1) log2 ||L (Theta o N)(Gamma) L||_alpha`` with
        ``L = Y^(1/2alpha) (x) I``,
        ``Y = Z^dagger Z`` and ``Theta`` the conjugation by
        ``sigma^((1-alpha)/alpha)``.
    """
    if not isinstance(psi, PureState):
        psi = PureState(psi)
    if not alpha > 1:
        raise DomainError("the norm form needs alpha > 1")
    sigma = ReplacerSpec(sigma).sigma if not isinstance(sigma, ReplacerSpec) else sigma.sigma
    omega = probe_output(channel, psi)
    psi_r = partial_trace_array(psi.matrix, psi.dims, 0)
    direct = float(sandwiched_renyi_array(omega, kron_array(psi_r, sigma.matrix), alpha))

    theta = channel.conjugated(support_power_array(sigma.matrix, (1 - alpha) / alpha))
    y = _input_state(psi)
    lift = kron_array(support_power_array(y, 1 / (2 * alpha), check=False),
                      np.eye(channel.dim_out))
    chained_operator = lift @ theta.choi() @ lift
    s = np.linalg.svd(chained_operator, compute_uv=False)
    with np.errstate(divide='ignore'):
        chained = alpha / (alpha - 1) * np.log2(schatten_from_values(s, alpha))
    return direct, float(chained)
