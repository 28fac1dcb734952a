"""
Readers for the JSON encodings written by `renyikit.writers`.

Every reader takes the decoded JSON object.  Missing keys and badly shaped
entries raise `ParseError`; objects that decode but violate a mathematical
invariant (a non-PSD state, a non-trace-preserving channel) raise
`DomainError` from the constructors.
"""
import json

import numpy as np

from ..exceptions import ParseError
from ..qmat.operators import DensityOperator
from ..qmat.channels import KrausChannel, ReplacerSpec
from ..divergences.hypothesis import BinaryTest
from ..simulation.adaptive import AdaptiveStrategy
from ..simulation.feedback import FeedbackProtocol

__all__ = ['loads', 'load', 'read_matrix', 'read_state', 'read_channel', 'read_replacer',
           'read_test', 'read_strategy', 'read_protocol', 'readers']


def loads(text, source='<string>'):
    try:
        return json.loads(text)
    except json.JSONDecodeError as ex:
        raise ParseError("{0}: {1}".format(source, ex.msg), line=ex.lineno, column=ex.colno)


def load(path):
    with open(path) as f:
        return loads(f.read(), source=path)


def _get(obj, key, what):
    if not isinstance(obj, dict):
        raise ParseError("{0}: expected an object, got {1}".format(what, type(obj).__name__))
    if key not in obj:
        raise ParseError("{0}: missing key {1!r}".format(what, key))
    return obj[key]


def _dims(obj, key, what):
    value = obj.get(key)
    if value is None:
        return None
    if not isinstance(value, list) or not all(isinstance(d, int) for d in value):
        raise ParseError("{0}: {1!r} must be a list of integers".format(what, key))
    return tuple(value)


def read_matrix(obj, what='matrix'):
    rows = _get(obj, 'rows', what)
    cols = _get(obj, 'cols', what)
    entries = _get(obj, 'entries', what)
    if not (isinstance(rows, int) and isinstance(cols, int) and rows > 0 and cols > 0):
        raise ParseError("{0}: 'rows' and 'cols' must be positive integers".format(what))
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise ParseError("{0}: 'entries' must hold rows * cols = {1} pairs"
                         .format(what, rows * cols))
    try:
        pairs = np.array(entries, dtype=float)
    except (TypeError, ValueError):
        raise ParseError("{0}: 'entries' must be [re, im] number pairs".format(what))
    if pairs.shape != (rows * cols, 2):
        raise ParseError("{0}: 'entries' must be [re, im] number pairs".format(what))
    return (pairs[:, 0] + 1j * pairs[:, 1]).reshape(rows, cols)


def read_state(obj, what='state'):
    matrix = read_matrix(_get(obj, 'matrix', what), what + '.matrix')
    return DensityOperator(matrix, dims=_dims(obj, 'dims', what))


def read_channel(obj, what='channel'):
    kraus = _get(obj, 'kraus', what)
    if not isinstance(kraus, list) or not kraus:
        raise ParseError("{0}: 'kraus' must be a non-empty list of matrices".format(what))
    ops = [read_matrix(k, "{0}.kraus[{1}]".format(what, i)) for i, k in enumerate(kraus)]
    for key, axis in (('dim_in', 1), ('dim_out', 0)):
        if key in obj and obj[key] != ops[0].shape[axis]:
            raise ParseError("{0}: {1!r} is {2} but the Kraus operators have shape {3}"
                             .format(what, key, obj[key], ops[0].shape))
    return KrausChannel(ops, dims_in=_dims(obj, 'dims_in', what),
                        dims_out=_dims(obj, 'dims_out', what))


def read_replacer(obj, what='replacer'):
    state = obj.get('sigma', obj) if isinstance(obj, dict) else obj
    return ReplacerSpec(read_state(state, what + '.sigma'))


def read_test(obj, what='test'):
    q = read_matrix(_get(obj, 'Q', what), what + '.Q')
    return BinaryTest(q, dims=_dims(obj, 'dims', what))


def read_strategy(obj, what='strategy'):
    initial = read_state(_get(obj, 'initial_state', what), what + '.initial_state')
    channels = [read_channel(ch, "{0}.adaptive_channels[{1}]".format(what, i))
                for i, ch in enumerate(obj.get('adaptive_channels', []))]
    test = read_test(_get(obj, 'final_test', what), what + '.final_test')
    return AdaptiveStrategy(initial, channels, test)


def read_protocol(obj, what='protocol'):
    shared = read_state(_get(obj, 'shared_state', what), what + '.shared_state')
    encoders = [[read_channel(ch, "{0}.encoders[{1}][{2}]".format(what, i, m))
                 for m, ch in enumerate(round_)]
                for i, round_ in enumerate(_get(obj, 'encoders', what))]
    decoders = [read_channel(ch, "{0}.decoders[{1}]".format(what, i))
                for i, ch in enumerate(obj.get('decoders', []))]
    povm = [read_matrix(e, "{0}.povm[{1}]".format(what, m))
            for m, e in enumerate(_get(obj, 'povm', what))]
    return FeedbackProtocol(shared, encoders, decoders, povm)


readers = {
    'matrix': read_matrix,
    'state': read_state,
    'channel': read_channel,
    'replacer': read_replacer,
    'test': read_test,
    'strategy': read_strategy,
    'protocol': read_protocol,
}
