import json

import numpy as np
import pytest

from ...exceptions import ParseError, DomainError
from ...qmat import random_state, random_channel, ReplacerSpec
from ...simulation import random_strategy, random_protocol, superdense_coding_protocol
from ...writers import dumps
from .. import loads, read, readers


def test_state_round_trip():
    state = random_state(4, 2, dims=(2, 2))
    back = readers['state'](loads(dumps(state, 'state')))
    assert back.dims == (2, 2)
    assert np.array_equal(back.matrix, state.matrix)


def test_channel_round_trip():
    channel = random_channel(2, 3, seed=1)
    back = readers['channel'](loads(dumps(channel, 'channel')))
    assert np.array_equal(back.kraus, channel.kraus)
    assert back.dims_out == (3,)


def test_replacer_accepts_bare_state():
    sigma = random_state(2, 0)
    encoded = json.loads(dumps(sigma, 'state'))
    assert np.array_equal(readers['replacer'](encoded).sigma.matrix, sigma.matrix)
    wrapped = json.loads(dumps(ReplacerSpec(sigma), 'replacer'))
    assert np.array_equal(readers['replacer'](wrapped).sigma.matrix, sigma.matrix)


def test_strategy_and_protocol_round_trip():
    strategy = random_strategy(2, 4)
    back = readers['strategy'](loads(dumps(strategy, 'strategy')))
    assert back.n_rounds == 2
    assert np.array_equal(back.final_test.Q.matrix, strategy.final_test.Q.matrix)
    protocol = random_protocol(3, 1, n_uses=2)
    back = readers['protocol'](loads(dumps(protocol, 'protocol')))
    assert back.message_count == 3
    assert back.n_uses == 2
    assert np.array_equal(back.povm, protocol.povm)
    remembering = random_protocol(2, 3, n_uses=2, d_mem=2)
    back = readers['protocol'](loads(dumps(remembering, 'protocol')))
    assert back.encoder_dims == remembering.encoder_dims == [(2, 2), (2, 2)]


def test_read_dispatches_on_kind(tmpdir):
    path = str(tmpdir.join('sdc.json'))
    with open(path, 'w') as f:
        f.write(dumps(superdense_coding_protocol(), 'protocol'))
    assert read(path).message_count == 4


def test_malformed_json_reports_position():
    with pytest.raises(ParseError) as excinfo:
        loads('{"rows": 2,\n "cols": }')
    assert excinfo.value.line == 2
    assert excinfo.value.column is not None


@pytest.mark.parametrize('obj', [
    {'rows': 2, 'cols': 2, 'entries': [[1, 0]]},
    {'rows': 1, 'cols': 1, 'entries': [[1, 0, 0]]},
    {'rows': 1, 'cols': 1, 'entries': [['a', 0]]},
    {'cols': 1, 'entries': [[1, 0]]},
    [1, 2],
])
def test_bad_matrices(obj):
    with pytest.raises(ParseError):
        readers['matrix'](obj)


def test_missing_key_is_named():
    with pytest.raises(ParseError) as excinfo:
        readers['channel']({'dim_in': 2})
    assert 'kraus' in str(excinfo.value)


def test_invalid_state_is_a_domain_error():
    negative = {'dims': [2], 'matrix': {'rows': 2, 'cols': 2,
                                        'entries': [[2, 0], [0, 0], [0, 0], [-1, 0]]}}
    with pytest.raises(DomainError):
        readers['state'](negative)


def test_unknown_kind(tmpdir):
    path = str(tmpdir.join('x.json'))
    with open(path, 'w') as f:
        f.write('{"kind": "spectrum"}')
    with pytest.raises(ParseError):
        read(path)
