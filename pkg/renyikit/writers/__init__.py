"""
Output: JSON encodings of the package objects and result tables.
"""
from .json_writer import (matrix_to_json, state_to_json, channel_to_json, replacer_to_json,
                          binary_test_to_json, strategy_to_json, protocol_to_json, encoders,
                          dumps)
from .table_writer import (format_number, normalize_row, rows_to_json, rows_to_csv,
                           rows_to_jsonl, write_rows, writers)
