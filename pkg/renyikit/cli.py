"""
Command line interface: ``renyikit <command> [options]``.

Exit status is 0 on success, 2 for unreadable input or bad arguments, 3 for
input outside an operation's domain and 4 when a verification fails.
"""
import argparse
import json
import sys

import numpy as np
from astropy import log

from .exceptions import ParseError, DomainError, VerificationError
from . import __version__
from . import readers
from .writers import write_rows, rows_to_jsonl
from .presets import build_preset, preset_to_json, preset_names
from .qmat import ReplacerSpec
from .divergences import (renyi_auto, hypothesis_testing, renyi_mutual_information,
                          hoeffding_divergence, hoeffding_anti_divergence)
from .channel_analysis import (channel_renyi_divergence, replacer_divergence_via_cb,
                               channel_mutual_information, channel_mutual_information_geometric,
                               stein_exponent, strong_converse_exponent, feedback_sc_exponent,
                               composite_stein_exponent, composite_sc_bounds)
from .simulation import (run_adaptive, renyi_cb_bound_check, nagaoka_bound_check,
                         optimal_final_test, run_feedback, run_feedback_replacer,
                         feedback_bound_check)
from .suites import suites, run_suite

__all__ = ['main', 'build_parser']

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_VERIFICATION = 4

PRESET_PREFIX = 'preset:'


def _number(token):
    token = token.strip().lower()
    if token in ('inf', '+inf', 'infinity'):
        return np.inf
    return float(token)


def _numbers(text):
    try:
        values = [_number(t) for t in text.split(',') if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated numbers, got {0!r}"
                                         .format(text))
    if not values:
        raise argparse.ArgumentTypeError("the list must not be empty")
    return values


def _positive(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive, got {0!r}".format(text))
    return value


def _load(source, kind):
    """Object of ``kind`` from a JSON file, or from ``preset:<name>``."""
    if source.startswith(PRESET_PREFIX):
        channel, replacer = build_preset(source[len(PRESET_PREFIX):])
        if kind == 'replacer':
            if replacer is None:
                raise DomainError("preset {0!r} has no replacer".format(source))
            return replacer
        if channel is None:
            return replacer.channel(replacer.dim_out)
        return channel
    obj = readers.load(source)
    return readers.readers[kind](obj, what=source)


def _replacer_for(args, channel_source):
    """The ``--replacer`` argument, else the replacer stored with the channel."""
    if args.replacer is not None:
        return _load(args.replacer, 'replacer')
    if channel_source.startswith(PRESET_PREFIX):
        return _load(channel_source, 'replacer')
    obj = readers.load(channel_source)
    if isinstance(obj, dict) and 'replacer' in obj:
        return readers.read_replacer(obj['replacer'], what=channel_source + '.replacer')
    raise DomainError("{0}: no replacer given (use --replacer)".format(channel_source))


def _seeds(args):
    return None if args.seeds is None else range(args.seeds)


def _families(args):
    return ('petz', 'sandwiched') if args.family == 'both' else (args.family,)


def cmd_divergence(args):
    rho = _load(args.rho, 'state')
    sigma = _load(args.sigma, 'state')
    rows = []
    for family in _families(args):
        for alpha in args.alpha:
            if family == 'petz' and np.isinf(alpha):
                continue
            value = renyi_auto(rho, sigma, alpha, family)
            rows.append(dict(family=family, alpha=alpha, value_bits=float(value)))
    return rows


def cmd_hypothesis_test(args):
    rho = _load(args.rho, 'state')
    sigma = _load(args.sigma, 'state')
    rows = []
    for epsilon in _required(args.epsilon, '--epsilon'):
        result = hypothesis_testing(rho, sigma, epsilon)
        rows.append(dict(epsilon=epsilon, value_bits=float(result.value),
                         type1=result.achieved_type1, type2=result.achieved_type2,
                         threshold=result.threshold))
        for r in args.r or ():
            rows.append(dict(epsilon=epsilon, r=r, quantity='hoeffding',
                             value_bits=float(hoeffding_divergence(rho, sigma, r).value)))
            rows.append(dict(epsilon=epsilon, r=r, quantity='hoeffding_anti',
                             value_bits=float(hoeffding_anti_divergence(rho, sigma, r).value)))
    return rows


def _report_row(report, **labels):
    row = dict(labels)
    row.update(report.to_dict())
    return row


def cmd_exponent(args):
    channel = _load(args.channel, 'channel')
    seeds = _seeds(args)
    quantity = args.quantity
    rows = []
    if quantity == 'stein':
        report = stein_exponent(channel, _replacer_for(args, args.channel), seeds=seeds)
        return [_report_row(report, quantity=quantity)]
    if quantity == 'composite-stein':
        return [_report_row(composite_stein_exponent(channel, seeds=seeds), quantity=quantity)]
    if quantity == 'feedback':
        for rate in _required(args.rate, '--rate'):
            rows.append(_report_row(feedback_sc_exponent(channel, rate, seeds=seeds),
                                    quantity=quantity, rate=rate))
        return rows
    for r in _required(args.r, '--r'):
        if quantity == 'sc':
            spec = _replacer_for(args, args.channel)
            rows.append(_report_row(strong_converse_exponent(channel, spec, r, seeds=seeds),
                                    quantity=quantity, r=r))
        else:
            bounds = composite_sc_bounds(channel, r, seeds=seeds)
            rows.append(_report_row(bounds.lower, quantity=quantity, bound='lower', r=r))
            rows.append(_report_row(bounds.upper, quantity=quantity, bound='upper', r=r))
    return rows


def _required(values, flag):
    if not values:
        raise DomainError("this quantity needs {0}".format(flag))
    return values


def cmd_channel_divergence(args):
    channel = _load(args.channel, 'channel')
    if args.other is not None:
        other = _load(args.other, 'channel')
    else:
        other = _replacer_for(args, args.channel)
    rows = []
    for family in _families(args):
        for alpha in args.alpha:
            if family == 'petz' and np.isinf(alpha):
                continue
            report = channel_renyi_divergence(channel, other, alpha, family, seeds=_seeds(args))
            rows.append(_report_row(report, family=family, alpha=alpha, method='direct'))
            if args.cb and isinstance(other, ReplacerSpec) and alpha > 1 and family == 'sandwiched':
                report = replacer_divergence_via_cb(channel, other, alpha, seeds=_seeds(args))
                rows.append(_report_row(report, family=family, alpha=alpha, method='cb_norm'))
    return rows


def cmd_mutual_info(args):
    obj = None if args.source.startswith(PRESET_PREFIX) else readers.load(args.source)
    rows = []
    if isinstance(obj, dict) and obj.get('kind') == 'state':
        state = readers.read_state(obj, what=args.source)
        for family in _families(args):
            for alpha in args.alpha:
                report = renyi_mutual_information(state, alpha, family, seeds=_seeds(args))
                rows.append(_report_row(report, family=family, alpha=alpha, form='state'))
        return rows
    channel = _load(args.source, 'channel')
    for family in _families(args):
        for alpha in args.alpha:
            report = channel_mutual_information(channel, alpha, family, seeds=_seeds(args))
            rows.append(_report_row(report, family=family, alpha=alpha, form='sup_inf'))
            if args.geometric:
                report = channel_mutual_information_geometric(channel, alpha, family,
                                                              seeds=_seeds(args))
                rows.append(_report_row(report, family=family, alpha=alpha, form='inf_sup'))
    return rows


def _bound_row(check, name, **labels):
    row = dict(labels, check=name, lhs=check.lhs, rhs=check.rhs, ok=check.ok)
    return row


def cmd_simulate_adaptive(args):
    strategy = _load(args.strategy, 'strategy')
    channel = _load(args.channel, 'channel')
    spec = _replacer_for(args, args.channel)
    if args.epsilon:
        strategy = optimal_final_test(strategy, channel, spec, args.epsilon[0])
    outcome = run_adaptive(strategy, channel, spec)
    rows = [dict(check='outcome', n_rounds=outcome.n_rounds, type1=outcome.type1,
                 type2=outcome.type2, factorization_residual=outcome.factorization_residual)]
    for alpha in args.alpha:
        if alpha > 1:
            rows.append(_bound_row(renyi_cb_bound_check(strategy, channel, spec, alpha,
                                                        seeds=_seeds(args)),
                                   'renyi-cb', alpha=alpha))
            rows.append(_bound_row(nagaoka_bound_check(strategy, channel, spec, alpha,
                                                       seeds=_seeds(args)),
                                   'nagaoka', alpha=alpha))
    return rows


def cmd_simulate_feedback(args):
    protocol = _load(args.protocol, 'protocol')
    channel = _load(args.channel, 'channel')
    rows = [dict(check='success', n_uses=protocol.n_uses,
                 message_count=protocol.message_count,
                 p_succ=run_feedback(protocol, channel))]
    if args.replacer is not None:
        spec = _load(args.replacer, 'replacer')
        rows.append(dict(check='replacer_success', n_uses=protocol.n_uses,
                         message_count=protocol.message_count,
                         p_succ=run_feedback_replacer(protocol, spec)))
    for alpha in args.alpha:
        if alpha > 1:
            rows.append(_bound_row(feedback_bound_check(protocol, channel, alpha,
                                                        seeds=_seeds(args)),
                                   'feedback-bound', alpha=alpha))
    return rows


def cmd_verify(args):
    result = run_suite(args.suite, seeds=args.seeds, tol=args.tol)
    text = rows_to_jsonl(result.rows)
    if args.out is not None:
        with open(args.out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    summary = dict(suite=result.name, passed=result.passed, failed=result.failed)
    sys.stderr.write(json.dumps(summary) + '\n')
    return None if not result.failed else EXIT_VERIFICATION


def cmd_presets(args):
    if args.name is None:
        sys.stdout.write('\n'.join(preset_names()) + '\n')
        return None
    text = json.dumps(preset_to_json(args.name), indent=1) + '\n'
    if args.out is not None:
        with open(args.out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return None


def _common(parser):
    parser.add_argument('--alpha', type=_numbers, default=[2.0],
                        help="Comma-separated Renyi orders ('inf' allowed)")
    parser.add_argument('--r', type=_numbers, default=None, help="Comma-separated rates r")
    parser.add_argument('--rate', type=_numbers, default=None,
                        help="Comma-separated communication rates R")
    parser.add_argument('--epsilon', type=_numbers, default=None, help="Type-I error levels")
    parser.add_argument('--seeds', type=int, default=None,
                        help="Number of seeds (multi-start or suite seeds)")
    parser.add_argument('--tol', type=_positive, default=None, help="Suite tolerance")
    parser.add_argument('--format', choices=('json', 'csv'), default='json')
    parser.add_argument('--out', default=None, help="Output file (default stdout)")
    parser.add_argument('--family', choices=('sandwiched', 'petz', 'both'),
                        default='sandwiched')
    parser.add_argument('--replacer', default=None,
                        help="Replacer output state file, or preset:<name>")
    parser.add_argument('--verbose', '-v', action='store_true', help="Log progress")
    parser.add_argument('--debug', '-d', action='store_true',
                        help="Log optimizer details and show tracebacks")


def build_parser():
    parser = argparse.ArgumentParser(prog='renyikit',
                                     description="Renyi divergences and discrimination "
                                                 "exponents of quantum channels")
    parser.add_argument('--version', action='version', version=__version__)
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('divergence', help="Renyi divergences of two states")
    p.add_argument('rho')
    p.add_argument('sigma')
    p.set_defaults(func=cmd_divergence)
    _common(p)

    p = sub.add_parser('hypothesis-test', help="Hypothesis testing relative entropy")
    p.add_argument('rho')
    p.add_argument('sigma')
    p.set_defaults(func=cmd_hypothesis_test)
    _common(p)

    p = sub.add_parser('exponent', help="Discrimination and communication exponents")
    p.add_argument('channel')
    p.add_argument('--quantity', choices=('stein', 'sc', 'feedback', 'composite',
                                          'composite-stein'), default='stein')
    p.set_defaults(func=cmd_exponent)
    _common(p)

    p = sub.add_parser('channel-divergence', help="Renyi divergence of two channels")
    p.add_argument('channel')
    p.add_argument('other', nargs='?', default=None,
                   help="Second channel; omit to compare against --replacer")
    p.add_argument('--cb', action='store_true',
                   help="Also evaluate through the CB (1 -> alpha) norm; applies to "
                        "sandwiched orders alpha > 1 and is skipped for the others")
    p.set_defaults(func=cmd_channel_divergence)
    _common(p)

    p = sub.add_parser('mutual-info', help="Renyi mutual information of a state or channel")
    p.add_argument('source')
    p.add_argument('--geometric', action='store_true',
                   help="Also compute the distance to the replacer channels")
    p.set_defaults(func=cmd_mutual_info)
    _common(p)

    p = sub.add_parser('simulate-adaptive', help="Run an adaptive strategy")
    p.add_argument('strategy')
    p.add_argument('channel')
    p.set_defaults(func=cmd_simulate_adaptive)
    _common(p)

    p = sub.add_parser('simulate-feedback', help="Run a feedback-assisted code")
    p.add_argument('protocol')
    p.add_argument('channel')
    p.set_defaults(func=cmd_simulate_feedback)
    _common(p)

    p = sub.add_parser('verify', help="Run a verification suite")
    p.add_argument('suite', choices=sorted(suites))
    p.set_defaults(func=cmd_verify)
    _common(p)

    p = sub.add_parser('presets', help="Emit a preset channel as JSON")
    p.add_argument('name', nargs='?', default=None)
    p.set_defaults(func=cmd_presets)
    _common(p)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else EXIT_PARSE

    if args.debug:
        log.setLevel('DEBUG')
    elif args.verbose:
        log.setLevel('INFO')
    else:
        log.setLevel('WARNING')

    try:
        result = args.func(args)
    except ParseError as ex:
        if args.debug:
            raise
        log.error(str(ex))
        return EXIT_PARSE
    except DomainError as ex:
        if args.debug:
            raise
        log.error(str(ex))
        return EXIT_DOMAIN
    except VerificationError as ex:
        if args.debug:
            raise
        log.error(str(ex))
        return EXIT_VERIFICATION

    if isinstance(result, list):
        text = write_rows(result, args.format, args.out)
        if args.out is None:
            sys.stdout.write(text)
        return EXIT_OK
    return EXIT_OK if result is None else result


if __name__ == '__main__':
    sys.exit(main())
