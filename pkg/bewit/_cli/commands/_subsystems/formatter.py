#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Renders reports. A report is a sequence of rows; a row is an ordered mapping from column names to scalars.
``None`` marks a blank cell.
"""

from __future__ import annotations
import io
import csv
import enum
import math
import typing
import logging
from .._yaml import YAMLDumper


Row = typing.Dict[str, typing.Any]
Formatter = typing.Callable[[typing.Sequence[Row]], str]

BLANK_CELL = '-'

_logger = logging.getLogger(__name__)


class Format(enum.Enum):
    CSV = enum.auto()
    JSON = enum.auto()
    YAML = enum.auto()


def make_formatter(fmt: Format) -> Formatter:
    return {
        Format.CSV:  _make_csv_formatter,
        Format.JSON: _make_json_formatter,
        Format.YAML: _make_yaml_formatter,
    }[fmt]()


def _make_csv_formatter() -> Formatter:
    """
    One header line followed by one line per row. Floats use the shortest round-trip representation with a dot
    as the decimal separator regardless of the locale.
    """
    def fmt(rows: typing.Sequence[Row]) -> str:
        if not rows:
            return ''
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(list(rows[0].keys()))
        for row in rows:
            writer.writerow([_csv_cell(v) for v in row.values()])
        return out.getvalue()
    return fmt


def _make_json_formatter() -> Formatter:
    """
    Strictly one object per line; infinities are rendered as strings.
    """
    import simplejson as json

    def fmt(rows: typing.Sequence[Row]) -> str:
        return ''.join(json.dumps({k: _json_value(v) for k, v in row.items()},
                                  ensure_ascii=False, separators=(',', ':')) + '\n' for row in rows)
    return fmt


def _make_yaml_formatter() -> Formatter:
    """
    Each row is a separate document.
    """
    dumper = YAMLDumper(explicit_start=True)
    return lambda rows: ''.join(dumper.dumps({k: _plain(v) for k, v in row.items()}) for row in rows)


def _csv_cell(value: typing.Any) -> str:
    value = _plain(value)
    if value is None:
        return BLANK_CELL
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _json_value(value: typing.Any) -> typing.Any:
    value = _plain(value)
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return value


def _plain(value: typing.Any) -> typing.Any:
    if isinstance(value, enum.Enum):
        return value.value
    if hasattr(value, 'item') and callable(value.item):  # NumPy scalars
        return value.item()
    return value


def _unittest_formatter() -> None:
    rows = [
        {'state': 'ME', 'ccnr': 4.0, 'v_metro': 0.55, 'ppt': False},
        {'state': 'BPD', 'ccnr': 1.5, 'v_metro': None, 'ppt': True},
    ]
    assert make_formatter(Format.CSV)(rows) == '\n'.join([
        'state,ccnr,v_metro,ppt',
        'ME,4.0,0.55,false',
        'BPD,1.5,-,true',
    ]) + '\n'
    assert make_formatter(Format.JSON)(rows).splitlines()[1] == '{"state":"BPD","ccnr":1.5,"v_metro":null,"ppt":true}'
    assert make_formatter(Format.JSON)([{'dim': float('inf')}]) == '{"dim":"inf"}\n'
    assert make_formatter(Format.YAML)(rows[:1]) == '---\nstate: ME\nccnr: 4.0\nv_metro: 0.55\nppt: false\n'
    assert make_formatter(Format.CSV)([]) == ''
