"""
Exact optimal type-II error for i.i.d. classical distributions.

The likelihood ratio of a sequence depends only on its type (the vector of
symbol counts), so the Neyman-Pearson test is built on type classes: types
are accepted in order of decreasing likelihood ratio until the accepted
p-mass reaches ``1 - epsilon``, with the last type accepted fractionally.
All masses are accumulated in the log domain.
"""
import numpy as np
from scipy.special import gammaln, logsumexp, xlogy

from ..exceptions import DomainError

__all__ = ['classical_iid_stein', 'compositions', 'type_class_log_masses']


def _distribution(p, name):
    p = np.asarray(p, dtype=float).ravel()
    if p.size == 0 or np.any(p < 0) or abs(p.sum() - 1) > 1e-9:
        raise DomainError("{0} is not a probability vector: {1}".format(name, p))
    return p / p.sum()


def compositions(n, k):
    """All count vectors of ``k`` non-negative integers summing to ``n``."""
    if k == 1:
        return np.array([[n]])
    if k == 2:
        first = np.arange(n, -1, -1)
        return np.stack([first, n - first], axis=-1)
    blocks = []
    for c in range(n, -1, -1):
        rest = compositions(n - c, k - 1)
        blocks.append(np.hstack([np.full((len(rest), 1), c), rest]))
    return np.vstack(blocks)


def type_class_log_masses(counts, p):
    """Natural log of ``p^n`` summed over each type class in ``counts``."""
    counts = np.asarray(counts)
    n = counts.sum(axis=-1)
    multinomial = gammaln(n + 1) - gammaln(counts + 1).sum(axis=-1)
    with np.errstate(divide='ignore'):
        return multinomial + xlogy(counts, p).sum(axis=-1)


def classical_iid_stein(p, q, n, epsilon):
    """
    Optimal ``beta = min Tr Q q^n`` subject to ``Tr (1 - Q) p^n <= epsilon``.

    Parameters
    ----------
    p, q : array_like
        Distributions on the same alphabet.
    n : int
        Number of copies.
    epsilon : float
        Type-I error level in ``[0, 1)``.

    Returns
    -------
    beta : float
        May underflow to 0 for large ``n``; ``rate`` is computed from the
        log-domain value.
    rate : float
        ``-(1/n) log2 beta``.
    """
    p = _distribution(p, 'p')
    q = _distribution(q, 'q')
    if p.size != q.size:
        raise DomainError("alphabets differ: {0} and {1} symbols".format(p.size, q.size))
    if not 0 <= epsilon < 1:
        raise DomainError("epsilon must lie in [0, 1), got {0}".format(epsilon))
    n = int(n)
    if n < 1:
        raise DomainError("need at least one copy")

    counts = compositions(n, p.size)
    log_p = type_class_log_masses(counts, p)
    log_q = type_class_log_masses(counts, q)
    keep = np.isfinite(log_p)
    log_p, log_q = log_p[keep], log_q[keep]
    with np.errstate(invalid='ignore'):
        ratio = np.where(np.isfinite(log_q), log_p - log_q, np.inf)
    order = np.argsort(-ratio, kind='stable')
    log_p, log_q = log_p[order], log_q[order]

    target = 1.0 - epsilon
    cumulative = np.cumsum(np.exp(log_p))
    k = min(int(np.searchsorted(cumulative, target, side='left')), len(cumulative) - 1)
    before = cumulative[k - 1] if k > 0 else 0.0
    atom = np.exp(log_p[k])
    fraction = 1.0 if atom == 0 else float(np.clip((target - before) / atom, 0.0, 1.0))
    with np.errstate(divide='ignore'):
        terms = np.append(log_q[:k], np.log(fraction) + log_q[k])
        log_beta = logsumexp(terms)
    beta = float(np.exp(log_beta))
    rate = float(-log_beta / np.log(2) / n)
    return beta, rate
