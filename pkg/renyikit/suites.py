"""
Seeded verification suites.

Each suite checks one family of inequalities or identities on random
instances and returns one row per check,
``{"check": ..., "seed": ..., "lhs": ..., "rhs": ..., "ok": ...}``.  Seeds
are independent and are mapped in parallel with `parallel_map`; rows come
back sorted by seed.
"""
from collections import namedtuple

import numpy as np
from astropy import log

from .exceptions import DomainError
from .qmat import (ReplacerSpec, identity_channel, dephasing_channel,
                   amplitude_damping_channel, random_state, random_pure, random_channel,
                   rng_for)
from .divergences import (relative_entropy, petz_renyi, sandwiched_renyi, renyi_auto,
                          random_binary_test, nagaoka_bound_check, htre_bound_check)
from .channel_analysis import (channel_renyi_divergence, replacer_divergence_via_cb,
                               state_parameterization_identity, norm_chain_identity,
                               stein_exponent, strong_converse_exponent,
                               channel_mutual_information, channel_mutual_information_geometric)
from .simulation import (random_strategy, renyi_cb_bound_check, superdense_coding_protocol,
                         random_protocol, feedback_bound_check, classical_iid_stein)
from .simulation import nagaoka_bound_check as strategy_nagaoka_check
from .parallel_map import parallel_map

__all__ = ['Suite', 'SuiteResult', 'suites', 'run_suite']

SuiteResult = namedtuple('SuiteResult', ['name', 'rows', 'passed', 'failed'])


class Suite(object):
    """
    Parameters
    ----------
    name : str
    check : callable
        ``check(seed, tol, context)`` returns a list of rows.
    tol : float
        Default tolerance.
    seeds : int
        Default number of seeds.
    prepare : callable, optional
        Computes shared data (channel divergences, mutual informations)
        once before the seeds are mapped.
    """

    def __init__(self, name, check, tol, seeds, prepare=None, doc=''):
        self.name = name
        self.check = check
        self.tol = tol
        self.seeds = seeds
        self.prepare = prepare
        self.doc = doc

    def __repr__(self):
        return "Suite({0!r}, tol={1:g}, seeds={2})".format(self.name, self.tol, self.seeds)


def _row(check, seed, lhs, rhs, ok):
    return dict(check=check, seed=int(seed), lhs=float(lhs), rhs=float(rhs), ok=bool(ok))


def _below(check, seed, lhs, rhs, tol):
    return _row(check, seed, lhs, rhs, lhs <= rhs + tol or np.isinf(rhs))


def _equal(check, seed, lhs, rhs, tol):
    return _row(check, seed, lhs, rhs, abs(lhs - rhs) <= tol or lhs == rhs)


def _random_pair(seed):
    d = 2 + seed % 2
    return d, random_state(d, rng_for(seed, 1)), random_state(d, rng_for(seed, 2))


SANDWICHED_DPI_ORDERS = (0.5, 0.9, 1.5, 2, 5)
PETZ_DPI_ORDERS = (0.25, 0.5, 1.5, 2)


def _dpi(seed, tol, context):
    d, rho, sigma = _random_pair(seed)
    channel = random_channel(d, d, seed=rng_for(seed, 3))
    out_rho, out_sigma = channel(rho), channel(sigma)
    rows = [_below('dpi/relative_entropy', seed, relative_entropy(out_rho, out_sigma),
                   relative_entropy(rho, sigma), tol)]
    for family, orders, func in (('sandwiched', SANDWICHED_DPI_ORDERS, sandwiched_renyi),
                                 ('petz', PETZ_DPI_ORDERS, petz_renyi)):
        for alpha in orders:
            rows.append(_below('dpi/{0}/alpha={1:g}'.format(family, alpha), seed,
                               func(out_rho, out_sigma, alpha), func(rho, sigma, alpha), tol))
    return rows


MONOTONE_ORDERS = (0.3, 0.5, 0.7, 0.9, 1.0, 1.5, 2, 3, 5, 8)
LIMIT_STEP = 1e-3
LIMIT_TOL = 5e-3


def _monotone(seed, tol, context):
    _, rho, sigma = _random_pair(seed)
    rows = []
    values = {}
    for family in ('sandwiched', 'petz'):
        values[family] = [float(renyi_auto(rho, sigma, a, family)) for a in MONOTONE_ORDERS]
        for k in range(len(MONOTONE_ORDERS) - 1):
            rows.append(_below('monotone-alpha/{0}/{1:g}-{2:g}'.format(
                family, MONOTONE_ORDERS[k], MONOTONE_ORDERS[k + 1]), seed,
                values[family][k], values[family][k + 1], tol))
    for k, alpha in enumerate(MONOTONE_ORDERS):
        rows.append(_below('monotone-alpha/sandwiched<=petz/alpha={0:g}'.format(alpha), seed,
                           values['sandwiched'][k], values['petz'][k], tol))
    limit = float(relative_entropy(rho, sigma))
    for family in ('sandwiched', 'petz'):
        lower = float(renyi_auto(rho, sigma, 1 - LIMIT_STEP, family))
        upper = float(renyi_auto(rho, sigma, 1 + LIMIT_STEP, family))
        name = 'monotone-alpha/{0}/limit'.format(family)
        rows.append(_below(name + '/below', seed, lower, limit, tol))
        rows.append(_below(name + '/above', seed, limit, upper, tol))
        rows.append(_equal(name + '/alpha=1-{0:g}'.format(LIMIT_STEP), seed, lower, limit,
                           LIMIT_TOL))
        rows.append(_equal(name + '/alpha=1+{0:g}'.format(LIMIT_STEP), seed, upper, limit,
                           LIMIT_TOL))
    return rows


def _parameterization(seed, tol, context):
    psi = random_pure(4, rng_for(seed, 1), dims=(2, 2))
    ch1 = random_channel(2, 2, seed=rng_for(seed, 2))
    ch2 = random_channel(2, 2, seed=rng_for(seed, 3))
    rows = []
    for family, alpha in (('sandwiched', 0.6), ('sandwiched', 2), ('sandwiched', 4),
                          ('petz', 0.5), ('petz', 1.5)):
        direct, reduced = state_parameterization_identity(ch1, ch2, psi, alpha, family)
        rows.append(_equal('state-parameterization/{0}/alpha={1:g}'.format(family, alpha),
                           seed, direct, reduced, tol))
        same, same_reduced = state_parameterization_identity(ch1, ch1, psi, alpha, family)
        rows.append(_equal('state-parameterization/same-channel/{0}/alpha={1:g}'
                           .format(family, alpha), seed, max(abs(same), abs(same_reduced)), 0,
                           tol))
    return rows


def _qubit_instance(seed):
    return random_channel(2, 2, seed=rng_for(seed, 1)), random_state(2, rng_for(seed, 2))


def _cb_norm(seed, tol, context):
    channel, sigma = _qubit_instance(seed)
    spec = ReplacerSpec(sigma)
    rows = []
    for alpha in (1.5, 2):
        via_cb = replacer_divergence_via_cb(channel, spec, alpha, seeds=range(4)).value
        direct = channel_renyi_divergence(channel, spec, alpha, seeds=range(4)).value
        rows.append(_equal('cb-norm/alpha={0:g}'.format(alpha), seed, via_cb, direct, tol))
    return rows


def _norm_chain(seed, tol, context):
    channel, sigma = _qubit_instance(seed)
    psi = random_pure(4, rng_for(seed, 3), dims=(2, 2))
    rows = []
    for alpha in (1.5, 2, 4):
        direct, chained = norm_chain_identity(channel, sigma, psi, alpha)
        rows.append(_equal('norm-chain/alpha={0:g}'.format(alpha), seed, direct, chained, tol))
    return rows


ADAPTIVE_ORDER = 2
ADAPTIVE_INSTANCES = 4


def _prepare_adaptive():
    instances = []
    for k in range(ADAPTIVE_INSTANCES):
        channel = random_channel(2, 2, seed=rng_for(k, 101))
        spec = ReplacerSpec(random_state(2, rng_for(k, 102)))
        divergence = channel_renyi_divergence(channel, spec, ADAPTIVE_ORDER).value
        instances.append((channel, spec, divergence))
    return instances


def _renyi_cb(seed, tol, context):
    channel, spec, divergence = context[seed % len(context)]
    strategy = random_strategy(1 + seed % 3, seed)
    bound = renyi_cb_bound_check(strategy, channel, spec, ADAPTIVE_ORDER,
                                 channel_divergence=divergence, tol=tol)
    nagaoka = strategy_nagaoka_check(strategy, channel, spec, ADAPTIVE_ORDER,
                                     channel_divergence=divergence, tol=tol)
    return [_row('renyi-cb/n={0}'.format(strategy.n_rounds), seed, *bound),
            _row('renyi-cb/nagaoka/n={0}'.format(strategy.n_rounds), seed, *nagaoka)]


NAGAOKA_TESTS = 100


def _nagaoka(seed, tol, context):
    _, rho, sigma = _random_pair(seed)
    d = rho.dim
    rows = []
    for alpha in (1.5, 2, 5):
        worst = None
        for k in range(NAGAOKA_TESTS):
            test = random_binary_test(d, rng_for(seed, 1000 + k))
            check = nagaoka_bound_check(rho, sigma, test, alpha, tol=tol)
            if worst is None or check.lhs - check.rhs > worst.lhs - worst.rhs:
                worst = check
        rows.append(_row('nagaoka/alpha={0:g}'.format(alpha), seed, *worst))
        for epsilon in (0.1, 0.5):
            rows.append(_row('nagaoka/htre/alpha={0:g}/epsilon={1:g}'.format(alpha, epsilon),
                             seed, *htre_bound_check(rho, sigma, epsilon, alpha, tol=tol)))
    return rows


MINIMAX_ORDERS = (0.6, 1.5, 2)


def _minimax(seed, tol, context):
    channel, sigma = _qubit_instance(seed)
    spec = ReplacerSpec(sigma)
    r = stein_exponent(channel, spec).value + 0.5
    sc = strong_converse_exponent(channel, spec, r)
    rows = [_equal('minimax/strong-converse', seed, sc.extra['sup_inf'],
                   sc.extra.get('inf_sup', sc.extra['sup_inf']), tol)]
    for alpha in MINIMAX_ORDERS:
        sup_inf = channel_mutual_information(channel, alpha)
        inf_sup = channel_mutual_information_geometric(channel, alpha)
        rows.append(_equal('minimax/mutual-information/alpha={0:g}'.format(alpha), seed,
                           sup_inf.value, inf_sup.value, tol))
    return rows


FEEDBACK_ORDERS = (1.5, 2, 4)
FEEDBACK_MEMORY = 2


def _prepare_feedback():
    channels = [identity_channel(2), dephasing_channel(1), amplitude_damping_channel(0.3),
                random_channel(2, 2, seed=rng_for(0, 103))]
    return [(ch, {a: channel_mutual_information(ch, a).value for a in FEEDBACK_ORDERS})
            for ch in channels]


def _feedback(seed, tol, context):
    rows = []
    if seed == 0:
        identity, information = context[0]
        for alpha in FEEDBACK_ORDERS:
            check = feedback_bound_check(superdense_coding_protocol(), identity, alpha,
                                         information=information[alpha], tol=tol)
            rows.append(_row('feedback-bound/superdense/alpha={0:g}'.format(alpha), seed,
                             *check))
    channel, information = context[seed % len(context)]
    message_count = 2 if seed % 2 else 4
    protocols = (random_protocol(message_count, seed),
                 random_protocol(message_count, seed, n_uses=2, d_mem=FEEDBACK_MEMORY))
    for protocol in protocols:
        for alpha in FEEDBACK_ORDERS:
            check = feedback_bound_check(protocol, channel, alpha,
                                         information=information[alpha], tol=tol)
            rows.append(_row('feedback-bound/M={0}/n={1}/memory={2}/alpha={3:g}'.format(
                protocol.message_count, protocol.n_uses, protocol.sender_memory, alpha),
                seed, *check))
    return rows


STEIN_P = (0.5, 0.5)
STEIN_Q = (0.25, 0.75)
STEIN_EPSILON = 0.1


STEIN_SHRINK = 4


def _stein_gap(n):
    p, q = np.array(STEIN_P), np.array(STEIN_Q)
    limit = float(np.sum(p * np.log2(p / q)))
    _, rate = classical_iid_stein(p, q, n, STEIN_EPSILON)
    return abs(rate - limit)


def _stein_classical(seed, tol, context):
    n = 1000 * (seed + 1)
    gap = _stein_gap(n)
    larger = _stein_gap(STEIN_SHRINK * n)
    return [_row('stein-classical/n={0}'.format(n), seed, gap, tol, gap <= tol),
            _row('stein-classical/shrink/n={0}-{1}'.format(n, STEIN_SHRINK * n), seed,
                 larger, gap, larger < gap)]


suites = {
    'dpi': Suite('dpi', _dpi, 1e-8, 100,
                 doc="data processing for both Renyi families"),
    'monotone-alpha': Suite('monotone-alpha', _monotone, 1e-9, 100,
                            doc="monotonicity in alpha and sandwiched <= Petz"),
    'lemma4': Suite('lemma4', _parameterization, 1e-8, 50,
                    doc="pure input states reduce to full-rank input states"),
    'lemma6': Suite('lemma6', _cb_norm, 1e-5, 50,
                    doc="replacer divergence equals the log CB norm"),
    'appendixA': Suite('appendixA', _norm_chain, 1e-8, 50,
                       doc="Schatten-norm form of the replacer divergence"),
    'renyi-cb': Suite('renyi-cb', _renyi_cb, 1e-6, 200, prepare=_prepare_adaptive,
                      doc="n D~_alpha bound for adaptive strategies"),
    'nagaoka': Suite('nagaoka', _nagaoka, 1e-8, 100,
                     doc="one-shot converse bounds"),
    'minimax': Suite('minimax', _minimax, 1e-4, 20,
                     doc="sup-inf against inf-sup exchanges"),
    'feedback-bound': Suite('feedback-bound', _feedback, 1e-5, 200,
                            prepare=_prepare_feedback,
                            doc="feedback-assisted strong converse bound"),
    'stein-classical': Suite('stein-classical', _stein_classical, 0.05, 4,
                             doc="exact i.i.d. Stein rates"),
}

aliases = {'state-parameterization': 'lemma4', 'cb-norm': 'lemma6', 'norm-chain': 'appendixA'}
suites.update((alias, suites[name]) for alias, name in aliases.items())


def run_suite(name, seeds=None, tol=None):
    """
    Run the suite ``name`` over ``seeds`` (an int for ``range(seeds)`` or
    an iterable).

    Returns
    -------
    SuiteResult
    """
    if name not in suites:
        raise DomainError("unknown suite {0!r}; expected one of {1}"
                          .format(name, sorted(suites)))
    suite = suites[name]
    if seeds is None:
        seeds = suite.seeds
    if isinstance(seeds, (int, np.integer)):
        seeds = range(int(seeds))
    seeds = sorted(int(s) for s in seeds)
    tol = suite.tol if tol is None else float(tol)
    context = suite.prepare() if suite.prepare is not None else None

    def run(seed):
        return suite.check(seed, tol, context)

    rows = [row for batch in parallel_map(run, seeds) for row in batch]
    failed = sum(1 for row in rows if not row['ok'])
    log.info("suite {0}: {1} checks over {2} seeds, {3} failed"
             .format(name, len(rows), len(seeds), failed))
    for row in rows:
        if not row['ok']:
            log.warning("{check} failed at seed {seed}: lhs={lhs!r}, rhs={rhs!r}".format(**row))
    return SuiteResult(name, rows, len(rows) - failed, failed)
