"""
Result tables: JSON arrays of row objects, CSV through `astropy.table.Table`,
and JSON lines for verification logs.

Numbers are written with 12 significant digits; +inf is written ``inf``.
"""
import io
import json
import math
import numbers

import numpy as np
from astropy.table import Table

__all__ = ['format_number', 'normalize_row', 'rows_to_json', 'rows_to_csv', 'rows_to_jsonl',
           'write_rows', 'writers']

SIGNIFICANT = 12


def format_number(x):
    """Round to 12 significant digits; non-finite values become strings."""
    x = float(x)
    if math.isinf(x):
        return 'inf' if x > 0 else '-inf'
    if math.isnan(x):
        return 'nan'
    return float('{0:.{1}g}'.format(x, SIGNIFICANT))


def _cell(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return format_number(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, dict):
        return normalize_row(value)
    if isinstance(value, (list, tuple)):
        return [_cell(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_cell(v) for v in value.tolist()]
    return value


def normalize_row(row):
    return {key: _cell(value) for key, value in row.items()}


def rows_to_json(rows):
    return json.dumps([normalize_row(r) for r in rows], indent=1) + '\n'


def rows_to_jsonl(rows):
    return ''.join(json.dumps(normalize_row(r)) + '\n' for r in rows)


def _csv_cell(value):
    if isinstance(value, (list, dict)):
        return json.dumps(value)
    if value is None:
        return ''
    return value


def rows_to_csv(rows):
    """
    One column per key, in first-appearance order.  Nested values
    (witness matrices, flag lists) are embedded as JSON strings.
    """
    rows = [normalize_row(r) for r in rows]
    names = []
    for r in rows:
        names.extend(k for k in r if k not in names)
    columns = []
    for name in names:
        cells = [_csv_cell(r.get(name)) for r in rows]
        if not all(isinstance(c, (bool, int, float)) for c in cells):
            cells = [str(c) for c in cells]
        columns.append(cells)
    table = Table(columns, names=names) if rows else Table()
    for name in names:
        if table[name].dtype.kind == 'f':
            table[name].format = '.{0}g'.format(SIGNIFICANT)
    buffer = io.StringIO()
    table.write(buffer, format='ascii.csv')
    return buffer.getvalue()


writers = {'json': rows_to_json, 'csv': rows_to_csv, 'jsonl': rows_to_jsonl}


def write_rows(rows, fmt='json', out=None):
    """
    Serialize ``rows`` (a list of dicts) as ``fmt``; write to the path
    ``out`` when given.  Returns the text.
    """
    text = writers[fmt](list(rows))
    if out is not None:
        with open(out, 'w') as f:
            f.write(text)
    return text
