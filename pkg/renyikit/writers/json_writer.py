"""
JSON encoders for the qmat objects, strategies and protocols.

Object encoders keep full float precision (``repr``), so reading an encoded
object back gives bitwise-equal arrays.
"""
import json

import numpy as np

from ..qmat.operators import as_matrix

__all__ = ['matrix_to_json', 'state_to_json', 'channel_to_json', 'replacer_to_json',
           'binary_test_to_json', 'strategy_to_json', 'protocol_to_json', 'encoders', 'dumps']


def matrix_to_json(matrix):
    """``{"rows": r, "cols": c, "entries": [[re, im], ...]}``, row-major."""
    m = np.atleast_2d(np.asarray(as_matrix(matrix), dtype=complex))
    return {'rows': int(m.shape[0]), 'cols': int(m.shape[1]),
            'entries': [[float(z.real), float(z.imag)] for z in m.ravel()]}


def state_to_json(state):
    return {'kind': 'state', 'dims': [int(d) for d in state.dims],
            'matrix': matrix_to_json(state.matrix)}


def channel_to_json(channel):
    return {'kind': 'channel', 'dim_in': int(channel.dim_in), 'dim_out': int(channel.dim_out),
            'dims_in': [int(d) for d in channel.dims_in],
            'dims_out': [int(d) for d in channel.dims_out],
            'kraus': [matrix_to_json(k) for k in channel.kraus]}


def replacer_to_json(spec):
    return {'kind': 'replacer', 'sigma': state_to_json(spec.sigma)}


def binary_test_to_json(test):
    return {'kind': 'test', 'dims': [int(d) for d in test.dims],
            'Q': matrix_to_json(test.Q.matrix)}


def strategy_to_json(strategy):
    return {'kind': 'strategy',
            'initial_state': state_to_json(strategy.initial_state),
            'adaptive_channels': [channel_to_json(ch) for ch in strategy.adaptive_channels],
            'final_test': binary_test_to_json(strategy.final_test)}


def protocol_to_json(protocol):
    return {'kind': 'protocol',
            'shared_state': state_to_json(protocol.shared_state),
            'encoders': [[channel_to_json(ch) for ch in round_]
                         for round_ in protocol.encoders],
            'decoders': [channel_to_json(ch) for ch in protocol.decoders],
            'povm': [matrix_to_json(e) for e in protocol.povm]}


encoders = {
    'matrix': matrix_to_json,
    'state': state_to_json,
    'channel': channel_to_json,
    'replacer': replacer_to_json,
    'test': binary_test_to_json,
    'strategy': strategy_to_json,
    'protocol': protocol_to_json,
}


def dumps(obj, kind, indent=None):
    return json.dumps(encoders[kind](obj), indent=indent)
