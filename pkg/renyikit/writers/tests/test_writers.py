import json

import numpy as np
from astropy.table import Table

from ...divergences import ExponentReport
from ...qmat import DensityOperator
from .. import (format_number, matrix_to_json, rows_to_json, rows_to_csv, rows_to_jsonl,
                write_rows)


def test_matrix_encoding_is_row_major():
    encoded = matrix_to_json(np.array([[1, 2j], [3, 4]]))
    assert encoded['rows'] == 2
    assert encoded['entries'][1] == [0.0, 2.0]
    assert encoded['entries'][2] == [3.0, 0.0]


def test_number_formatting():
    assert format_number(np.inf) == 'inf'
    assert format_number(0.41503749927884381) == 0.415037499279
    assert format_number(2) == 2.0


def test_json_rows():
    rows = [dict(family='sandwiched', alpha=2, value_bits=np.inf, ok=True)]
    decoded = json.loads(rows_to_json(rows))
    assert decoded == [dict(family='sandwiched', alpha=2, value_bits='inf', ok=True)]


def test_jsonl_rows():
    rows = [dict(check='dpi', seed=k, lhs=0.1, rhs=0.2, ok=True) for k in range(3)]
    lines = rows_to_jsonl(rows).splitlines()
    assert len(lines) == 3
    assert json.loads(lines[2])['seed'] == 2


def test_csv_rows():
    rows = [dict(alpha=0.5, value_bits=1 / 3), dict(alpha=2.0, value_bits=np.inf)]
    text = rows_to_csv(rows)
    table = Table.read(text, format='ascii.csv')
    assert list(table.colnames) == ['alpha', 'value_bits']
    assert '0.333333333333' in text
    assert 'inf' in text


def test_write_rows_to_file(tmpdir):
    path = str(tmpdir.join('out.csv'))
    text = write_rows([dict(a=1.0)], 'csv', out=path)
    with open(path) as f:
        assert f.read() == text


def test_report_serialization():
    report = ExponentReport(1.0, alpha_star=np.inf, rho_star=DensityOperator.maximally_mixed(2),
                            flags={'attained_at_boundary'}, extra=dict(r=3))
    row = json.loads(rows_to_json([report.to_dict()]))[0]
    assert row['alpha_star'] == 'inf'
    assert row['flags'] == ['attained_at_boundary']
    assert row['rho_star']['rows'] == 2
    assert row['r'] == 3
    assert row['sigma_star'] is None
