"""
Renyi mutual information of bipartite states,
``I_alpha(R;B) = inf_sigma D_alpha(rho_RB || rho_R (x) sigma_B)``.
"""
import numpy as np
from astropy import log

from ..config import ConfigDescriptor
from ..exceptions import DomainError
from ..qmat.operators import DensityOperator
from ..qmat.linalg import support_power_array, kron_array
from ..qmat.subsystems import partial_trace, partial_trace_array
from ..optimize.states import optimize_state
from ..optimize.bloch import grid_search
from .renyi import FAMILIES, relative_entropy, sandwiched_renyi_array, LN2
from .values import ExponentReport

__all__ = ['renyi_mutual_information', 'sibson_mutual_information']


def _bipartite(rho_rb):
    dims = getattr(rho_rb, 'dims', None)
    if dims is None or len(dims) != 2:
        raise DomainError("mutual information needs a state on exactly two subsystems, "
                          "got dims {0}".format(dims))
    return rho_rb


def sibson_mutual_information(rho_rb, alpha):
    """
    Petz Renyi mutual information in closed form.

    With ``Z = Tr_R[rho_RB^alpha (rho_R^(1-alpha) (x) I)]`` the optimal
    ``sigma_B`` is ``Z^(1/alpha)`` normalized, and
    ``I_alpha = alpha/(alpha-1) log2 Tr Z^(1/alpha)``.

    Returns
    -------
    value : float
    sigma_star : DensityOperator
    """
    rho_rb = _bipartite(rho_rb)
    d_r, d_b = rho_rb.dims
    rho_r = partial_trace(rho_rb, 0).matrix
    half = kron_array(support_power_array(rho_r, (1 - alpha) / 2, check=False),
                      np.eye(d_b))
    powered = support_power_array(rho_rb.matrix, alpha, check=False)
    z = partial_trace_array(half @ powered @ half, (d_r, d_b), 1)
    root = support_power_array(z, 1 / alpha, check=False)
    norm = np.trace(root).real
    with np.errstate(divide='ignore'):
        value = alpha / (alpha - 1) * np.log(norm) / LN2
    return float(value), DensityOperator(root / norm, dims=(d_b,))


def _sandwiched_objective(rho_rb, rho_r, alpha):
    def batched(sigmas):
        sigmas = np.asarray(sigmas)
        return sandwiched_renyi_array(rho_rb, kron_array(rho_r, sigmas), alpha)
    return batched


@ConfigDescriptor
def renyi_mutual_information(rho_rb, alpha, family='sandwiched', alpha_one_window=None,
                             certificate_tol=None, seeds=None, starts=(), certify=True):
    """
    Renyi mutual information of ``rho_rb`` and the minimizing ``sigma_B``.

    Parameters
    ----------
    rho_rb : DensityOperator
        State with ``dims == (d_R, d_B)``.
    alpha : float
    family : {'petz', 'sandwiched'}
    seeds : iterable of int, optional
        Multi-start seeds for the sandwiched search.
    starts : sequence of array_like
        Extra starting points for sigma_B (warm starts).
    certify : bool
        Cross-check a qubit B on the Bloch grid.

    Returns
    -------
    ExponentReport
        ``sigma_star`` holds the minimizer.  For the sandwiched family and a
        qubit B the descent is cross-checked on a Bloch grid, and
        ``gap_certificate`` is the amount by which the descent exceeds the
        grid minimum.
    """
    if family not in FAMILIES:
        raise DomainError("unknown divergence family {0!r}; expected one of {1}"
                          .format(family, FAMILIES))
    if not alpha > 0:
        raise DomainError("Renyi order must be positive, got {0}".format(alpha))
    rho_rb = _bipartite(rho_rb)
    d_b = rho_rb.dims[1]
    rho_b = partial_trace(rho_rb, 1)

    if abs(alpha - 1) < alpha_one_window:
        rho_r = partial_trace(rho_rb, 0)
        value = relative_entropy(rho_rb, kron_array(rho_r.matrix, rho_b.matrix))
        return ExponentReport(value, alpha_star=1.0, sigma_star=rho_b, extra=dict(family=family))
    if family == 'petz':
        value, sigma_star = sibson_mutual_information(rho_rb, alpha)
        return ExponentReport(value, alpha_star=alpha, sigma_star=sigma_star,
                              extra=dict(family=family))

    rho_r = partial_trace(rho_rb, 0).matrix
    batched = _sandwiched_objective(rho_rb.matrix, rho_r, alpha)
    initial = list(starts) + [rho_b.matrix]
    if np.isfinite(alpha):
        initial.append(sibson_mutual_information(rho_rb, alpha)[1].matrix)
    search = optimize_state(lambda s: float(batched(s[None])[0]), d_b, maximize=False,
                            starts=initial, seeds=seeds)
    value, sigma_star, seed = search.value, search.state, search.seed
    gap = 0.0
    flags = set()
    if certify and d_b == 2:
        grid = grid_search(batched, maximize=False)
        gap = max(0.0, value - grid.value)
        if grid.value < value:
            value, sigma_star, seed = grid.value, grid.state, 'grid'
        if gap > certificate_tol:
            flags.add('heuristic')
    log.debug("sandwiched mutual information at alpha={0}: {1:.12g} (gap {2:.3g})"
              .format(alpha, value, gap))
    return ExponentReport(value, alpha_star=alpha,
                          sigma_star=DensityOperator.normalized(sigma_star, dims=(d_b,)),
                          gap_certificate=gap, iterations=search.iterations,
                          tolerance=certificate_tol, flags=flags, seed=seed,
                          extra=dict(family=family))
