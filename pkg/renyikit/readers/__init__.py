"""
Input: JSON files describing states, channels, tests, strategies and
protocols.
"""
from ..exceptions import ParseError
from .json_reader import (loads, load, read_matrix, read_state, read_channel, read_replacer,
                          read_test, read_strategy, read_protocol, readers)


def read(source, kind=None):
    """
    Read an object from the JSON file ``source``.

    ``kind`` selects the reader; when omitted the file's ``"kind"`` key is
    used.
    """
    obj = load(source)
    if kind is None:
        kind = obj.get('kind') if isinstance(obj, dict) else None
    if kind not in readers:
        raise ParseError("{0}: unknown object kind {1!r}; expected one of {2}"
                         .format(source, kind, sorted(readers)))
    return readers[kind](obj, what=source)
