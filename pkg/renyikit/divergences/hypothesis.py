"""
Binary tests and the hypothesis testing relative entropy.
"""
import numpy as np
from astropy import log

from ..config import mycfg, ConfigDescriptor
from ..exceptions import DomainError
from ..qmat.operators import HermitianOperator, as_matrix
from ..qmat.linalg import hermitian_eig, support_mask, dagger
from ..qmat.sampling import rng_for, random_unitary
from .values import DivergenceValue
from .renyi import sandwiched_renyi

__all__ = ['BinaryTest', 'HypothesisTestResult', 'hypothesis_testing',
           'random_binary_test', 'nagaoka_bound_check', 'htre_bound_check',
           'BoundCheck']


class BinaryTest(object):
    """
    The two-outcome measurement {Q, I - Q}; Q accepts the null hypothesis.
    """

    def __init__(self, q, dims=None, test_tol=None):
        if test_tol is None:
            test_tol = mycfg.test_tol
        if not isinstance(q, HermitianOperator):
            q = HermitianOperator(q, dims=dims)
        elif dims is not None:
            q = q.with_dims(dims)
        ev = q.eigvalsh()
        if ev[0] < -test_tol or ev[-1] > 1 + test_tol:
            raise DomainError("test operator must satisfy 0 <= Q <= I (spectrum [{0:g}, {1:g}])"
                              .format(ev[0], ev[-1]))
        self.Q = q

    @property
    def dim(self):
        return self.Q.dim

    @property
    def dims(self):
        return self.Q.dims

    def type1(self, rho):
        """Probability of rejecting rho: Tr (I - Q) rho."""
        return float(1 - np.trace(self.Q.matrix @ as_matrix(rho)).real)

    def type2(self, sigma):
        """Probability of accepting sigma: Tr Q sigma."""
        return float(np.trace(self.Q.matrix @ as_matrix(sigma)).real)

    def __repr__(self):
        return "BinaryTest(dims={0})".format(self.dims)


class HypothesisTestResult(object):
    """
    Attributes
    ----------
    value : DivergenceValue
        D_H^epsilon = -log2 of the optimal type-II error.
    test : BinaryTest
        A test attaining it.
    achieved_type1, achieved_type2 : float
    threshold : float
        The Neyman-Pearson threshold t of rho - t sigma.
    """

    def __init__(self, value, test, achieved_type1, achieved_type2, threshold=None):
        self.value = value
        self.test = test
        self.achieved_type1 = achieved_type1
        self.achieved_type2 = achieved_type2
        self.threshold = threshold

    def __repr__(self):
        return ("HypothesisTestResult(value={0!r}, type1={1:.6g}, type2={2:.6g})"
                .format(float(self.value), self.achieved_type1, self.achieved_type2))


def _projector(v, mask):
    cols = v[:, mask]
    return cols @ dagger(cols)


def _positive_weight(rho, sigma, t):
    w, v = hermitian_eig(rho - t * sigma)
    return float(np.trace(_projector(v, w > 0) @ rho).real)


def _value_from_beta(beta):
    if beta <= 0:
        return DivergenceValue(np.inf)
    return DivergenceValue(-np.log2(beta))


@ConfigDescriptor
def hypothesis_testing(rho, sigma, epsilon, np_gap=None, maxiter=None):
    """
    Optimal type-II error at type-I level ``epsilon`` and the test that
    attains it.

    The test is the randomized Neyman-Pearson test
    ``Q = P[rho - t sigma > 0] + gamma P[rho - t sigma = 0]``.  The weight
    ``Tr P[rho - t sigma > 0] rho`` is non-increasing in ``t``, so ``t`` is
    found by bisection and ``gamma`` then meets ``Tr Q rho = 1 - epsilon``
    exactly.  Eigenvalues within ``np_gap`` (relative to the operator
    scale) of zero form the boundary eigenspace.

    Parameters
    ----------
    rho, sigma : DensityOperator
    epsilon : float
        Type-I error budget in (0, 1).

    Returns
    -------
    HypothesisTestResult
    """
    if not 0 < epsilon < 1:
        raise DomainError("epsilon must lie in (0, 1), got {0}".format(epsilon))
    r = as_matrix(rho)
    s = as_matrix(sigma)
    if r.shape != s.shape:
        raise DomainError("states have different dimensions")
    dims = getattr(rho, 'dims', None)
    target = 1 - epsilon
    d = r.shape[0]

    ws, vs = hermitian_eig(s)
    kernel = _projector(vs, ~support_mask(ws))
    kernel_weight = float(np.trace(kernel @ r).real)
    if kernel_weight >= target:
        # the kernel of sigma alone carries enough of rho: beta = 0
        gamma = target / kernel_weight
        test = BinaryTest(np.clip(gamma, 0, 1) * kernel, dims=dims)
        return HypothesisTestResult(DivergenceValue(np.inf), test,
                                    test.type1(r), test.type2(s), threshold=np.inf)

    lo = 0.0
    smallest = ws[support_mask(ws)].min()
    hi = max(np.linalg.eigvalsh(r)[-1] / smallest, 1.0)
    for _ in range(200):
        if _positive_weight(r, s, hi) <= target:
            break
        lo, hi = hi, 2 * hi
    else:
        raise DomainError("Neyman-Pearson threshold search did not bracket")
    for _ in range(int(maxiter)):
        if hi - lo <= 1e-15 * hi:
            break
        mid = 0.5 * (lo + hi)
        if _positive_weight(r, s, mid) <= target:
            hi = mid
        else:
            lo = mid

    w, v = hermitian_eig(r - hi * s)
    scale = max(np.abs(np.linalg.eigvalsh(r)).max(), hi * np.abs(ws).max(), 1e-300)
    zero = np.abs(w) <= np_gap * scale
    positive = (w > 0) & ~zero
    q_pos = _projector(v, positive)
    q_zero = _projector(v, zero)
    pos_weight = float(np.trace(q_pos @ r).real)
    zero_weight = float(np.trace(q_zero @ r).real)
    if zero_weight > 0:
        gamma = float(np.clip((target - pos_weight) / zero_weight, 0, 1))
    else:
        gamma = 0.0
    q = q_pos + gamma * q_zero
    test = BinaryTest(q, dims=dims)
    type1 = test.type1(r)
    type2 = test.type2(s)
    log.debug("Neyman-Pearson threshold t={0:.12g}, gamma={1:.6g}, beta={2:.6g}"
              .format(hi, gamma, type2))
    return HypothesisTestResult(_value_from_beta(type2), test, type1, type2,
                                threshold=hi)


def random_binary_test(d, seed, dims=None):
    """U diag(u) U^dagger with u uniform in [0, 1] and U Haar."""
    u = random_unitary(d, seed)
    eigenvalues = rng_for(seed, 1).uniform(0, 1, size=d)
    return BinaryTest((u * eigenvalues) @ u.conj().T, dims=dims)


class BoundCheck(tuple):
    """``(lhs, rhs, ok)`` with named access."""

    def __new__(cls, lhs, rhs, ok):
        return tuple.__new__(cls, (float(lhs), float(rhs), bool(ok)))

    lhs = property(lambda self: self[0])
    rhs = property(lambda self: self[1])
    ok = property(lambda self: self[2])

    def __repr__(self):
        return "BoundCheck(lhs={0!r}, rhs={1!r}, ok={2})".format(*self)


def nagaoka_bound_check(rho, sigma, test, alpha, tol=1e-8):
    """
    ``-log2 Tr Q sigma <= D~_alpha(rho||sigma) - alpha/(alpha-1) log2 Tr Q rho``
    for a test Q and alpha > 1.
    """
    if not alpha > 1:
        raise DomainError("the bound holds for alpha > 1")
    accept_rho = 1 - test.type1(rho)
    accept_sigma = test.type2(sigma)
    with np.errstate(divide='ignore'):
        lhs = -np.log2(accept_sigma) if accept_sigma > 0 else np.inf
        rhs = (float(sandwiched_renyi(rho, sigma, alpha))
               - alpha / (alpha - 1) * np.log2(accept_rho))
    return BoundCheck(lhs, rhs, lhs <= rhs + tol or np.isinf(rhs))


def htre_bound_check(rho, sigma, epsilon, alpha, tol=1e-8):
    """
    ``D_H^eps(rho||sigma) <= D~_alpha(rho||sigma) + alpha/(alpha-1) log2(1/(1-eps))``.
    """
    if not alpha > 1:
        raise DomainError("the bound holds for alpha > 1")
    lhs = float(hypothesis_testing(rho, sigma, epsilon).value)
    rhs = (float(sandwiched_renyi(rho, sigma, alpha))
           + alpha / (alpha - 1) * np.log2(1 / (1 - epsilon)))
    return BoundCheck(lhs, rhs, lhs <= rhs + tol or np.isinf(rhs))
