import json

import numpy as np
import pytest

from ..cli import main, EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_VERIFICATION
from ..qmat import DensityOperator
from ..writers import state_to_json, matrix_to_json
from ..suites import Suite, suites


def _write_state(tmpdir, name, diagonal):
    path = tmpdir.join(name)
    path.write(json.dumps(state_to_json(DensityOperator(np.diag(diagonal)))))
    return str(path)


@pytest.fixture
def pair(tmpdir):
    return (_write_state(tmpdir, 'rho.json', [0.5, 0.5]),
            _write_state(tmpdir, 'sigma.json', [0.25, 0.75]))


def _rows(capsys):
    return json.loads(capsys.readouterr().out)


def test_divergence_rows(pair, capsys):
    assert main(['divergence', pair[0], pair[1], '--alpha', '0.5,1,2']) == EXIT_OK
    rows = _rows(capsys)
    assert [r['alpha'] for r in rows] == [0.5, 1, 2]
    assert rows[2]['value_bits'] == pytest.approx(np.log2(4 / 3), abs=1e-6)
    assert rows[1]['value_bits'] == pytest.approx(0.5 + 0.5 * np.log2(2 / 3), abs=1e-9)


def test_divergence_both_families_agree_when_commuting(pair, capsys):
    assert main(['divergence', pair[0], pair[1], '--alpha', '2', '--family', 'both']) == EXIT_OK
    petz, sandwiched = _rows(capsys)
    assert petz['value_bits'] == pytest.approx(sandwiched['value_bits'], abs=1e-10)
    assert petz['value_bits'] == pytest.approx(0.415037, abs=1e-6)


def test_equal_states_give_zero(pair, capsys):
    assert main(['divergence', pair[0], pair[0], '--alpha', '0.5,1,2,inf']) == EXIT_OK
    assert all(abs(r['value_bits']) < 1e-10 for r in _rows(capsys))


def test_infinite_written_as_string(tmpdir, capsys):
    rho = _write_state(tmpdir, 'ket0.json', [1., 0.])
    sigma = _write_state(tmpdir, 'ket1.json', [0., 1.])
    assert main(['divergence', rho, sigma, '--alpha', '2']) == EXIT_OK
    assert _rows(capsys)[0]['value_bits'] == 'inf'


def test_csv_output_to_file(pair, tmpdir):
    out = str(tmpdir.join('rows.csv'))
    assert main(['divergence', pair[0], pair[1], '--alpha', '2', '--format', 'csv',
                 '--out', out]) == EXIT_OK
    lines = open(out).read().splitlines()
    assert lines[0] == 'family,alpha,value_bits'
    assert lines[1].startswith('sandwiched,2')


def test_hypothesis_test(pair, capsys):
    assert main(['hypothesis-test', pair[0], pair[1], '--epsilon', '0.1']) == EXIT_OK
    row = _rows(capsys)[0]
    assert row['type1'] <= 0.1 + 1e-9
    assert row['value_bits'] == pytest.approx(-np.log2(row['type2']), rel=1e-9)


def test_parse_error_exit_code(tmpdir):
    path = tmpdir.join('broken.json')
    path.write('{"kind": "state", "matrix": ')
    assert main(['divergence', str(path), str(path)]) == EXIT_PARSE


def test_missing_key_exit_code(tmpdir):
    path = tmpdir.join('nomatrix.json')
    path.write('{"kind": "state"}')
    assert main(['divergence', str(path), str(path)]) == EXIT_PARSE


def test_bad_argument_exit_code(pair):
    assert main(['divergence', pair[0], pair[1], '--alpha', 'two']) == EXIT_PARSE
    assert main(['no-such-command']) == EXIT_PARSE


def test_domain_error_exit_code(tmpdir, pair):
    path = tmpdir.join('negative.json')
    matrix = np.diag([1.5, -0.5])
    path.write(json.dumps({'kind': 'state', 'matrix': matrix_to_json(matrix)}))
    assert main(['divergence', str(path), pair[1]]) == EXIT_DOMAIN
    assert main(['divergence', pair[0], pair[1], '--alpha', '-1']) == EXIT_DOMAIN


def test_presets_listing(capsys):
    assert main(['presets']) == EXIT_OK
    names = capsys.readouterr().out.split()
    assert 'identity_2' in names
    assert 'illumination_toy_0.8_0.1' in names


def test_preset_json(tmpdir):
    out = str(tmpdir.join('toy.json'))
    assert main(['presets', 'illumination_toy_0.8_0.1', '--out', out]) == EXIT_OK
    obj = json.load(open(out))
    assert obj['kind'] == 'channel'
    assert obj['replacer']['kind'] == 'replacer'


def test_unknown_preset():
    assert main(['presets', 'teleporter_3']) == EXIT_DOMAIN


def test_sc_exponent_of_matching_replacer(capsys):
    assert main(['exponent', 'preset:replacer_mixed_2', '--quantity', 'sc', '--r', '1',
                 '--replacer', 'preset:replacer_mixed_2', '--seeds', '2']) == EXIT_OK
    row = _rows(capsys)[0]
    assert row['r'] == 1
    assert row['value'] == pytest.approx(1, abs=1e-6)


def test_exponent_needs_rate():
    assert main(['exponent', 'preset:identity_2', '--quantity', 'feedback']) == EXIT_DOMAIN


def test_stored_replacer_is_used(tmpdir, capsys):
    out = str(tmpdir.join('toy.json'))
    assert main(['presets', 'illumination_toy_0.8_0.1', '--out', out]) == EXIT_OK
    assert main(['channel-divergence', out, '--alpha', '2', '--seeds', '2']) == EXIT_OK
    row = _rows(capsys)[0]
    assert np.isfinite(row['value'])


def test_missing_replacer():
    assert main(['channel-divergence', 'preset:identity_2', '--alpha', '2']) == EXIT_DOMAIN


def test_verify_writes_jsonl(tmpdir):
    out = str(tmpdir.join('dpi.jsonl'))
    assert main(['verify', 'dpi', '--seeds', '2', '--out', out]) == EXIT_OK
    rows = [json.loads(line) for line in open(out)]
    assert rows
    assert {r['seed'] for r in rows} == {0, 1}
    assert all(r['ok'] for r in rows)


def test_verify_parameterization_suite_by_name(tmpdir):
    out = str(tmpdir.join('lemma4.jsonl'))
    assert main(['verify', 'lemma4', '--seeds', '2', '--out', out]) == EXIT_OK
    rows = [json.loads(line) for line in open(out)]
    same = [r for r in rows if '/same-channel/' in r['check']]
    assert same and all(r['ok'] and abs(r['lhs']) <= 1e-8 for r in same)
    assert all(r['ok'] for r in rows)


@pytest.mark.parametrize('name', ['lemma6', 'appendixA', 'norm-chain'])
def test_verify_accepts_suite_names(name, tmpdir):
    out = str(tmpdir.join('suite.jsonl'))
    assert main(['verify', name, '--seeds', '1', '--out', out]) == EXIT_OK


def test_verify_failure_exit_code(monkeypatch, tmpdir):
    def always_fails(seed, tol, context):
        return [dict(check='impossible', seed=seed, lhs=1.0, rhs=0.0, ok=False)]

    monkeypatch.setitem(suites, 'impossible', Suite('impossible', always_fails, 1e-9, 1))
    out = str(tmpdir.join('fail.jsonl'))
    assert main(['verify', 'impossible', '--out', out]) == EXIT_VERIFICATION
    assert json.loads(open(out).readline())['ok'] is False


def test_cb_rows_only_above_one(capsys):
    assert main(['channel-divergence', 'preset:identity_2', '--replacer',
                 'preset:replacer_mixed_2', '--alpha', '1,2', '--cb', '--seeds', '2']) == EXIT_OK
    rows = _rows(capsys)
    assert [r['alpha'] for r in rows if r['method'] == 'cb_norm'] == [2]
    assert {r['alpha'] for r in rows if r['method'] == 'direct'} == {1, 2}
