#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Witness coefficients are exchanged as CSV with the header ``x,y,z,w``, one-based indices,
and the coefficient written as an exact rational: ``-1/16``, ``0``, or ``1/16``.
See-saw reports are JSON objects.
"""

from __future__ import annotations
import csv
import typing
import fractions
import numpy
from .. import basis
from .. import states
from ._coefficients import WitnessCoefficients, WEIGHT
from ._seesaw import SeeSawSummary


CSV_HEADER = ('x', 'y', 'z', 'w')

_TEXT = {-1: '-1/16', 0: '0', 1: '1/16'}

WEIGHT_FRACTION = fractions.Fraction(1, 16)


def write_witness_csv(w: WitnessCoefficients, stream: typing.TextIO) -> None:
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    n = basis.OPERATOR_COUNT
    for x in range(n):
        for y in range(n):
            for z in range(n):
                writer.writerow((x + 1, y + 1, z + 1, _TEXT[int(round(w.w[x, y, z] / WEIGHT))]))


def read_witness_csv(stream: typing.TextIO,
                     permutation: typing.Optional[basis.Permutation] = None) -> WitnessCoefficients:
    """
    The relabeling is not part of the file; it can be supplied by the caller and is the identity by default.

    :raises: :class:`bewit.states.ParseError` if the header, an index, or a value is malformed,
        or if any of the 4096 entries is missing or repeated.
    """
    n = basis.OPERATOR_COUNT
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None or tuple(h.strip() for h in header) != CSV_HEADER:
        raise states.ParseError(f'Expected the header {",".join(CSV_HEADER)}, got {header!r}')
    out = numpy.full((n, n, n), numpy.nan)
    for line_number, row in enumerate(reader, start=2):
        if not row:
            continue
        try:
            x, y, z = (int(v) for v in row[:3])
            value = fractions.Fraction(row[3].strip())
        except (ValueError, IndexError, ZeroDivisionError) as ex:
            raise states.ParseError(f'Line {line_number}: {type(ex).__name__}: {ex}') from None
        if len(row) != 4 or not all(1 <= i <= n for i in (x, y, z)):
            raise states.ParseError(f'Line {line_number}: malformed row {row!r}')
        if value not in (-WEIGHT_FRACTION, 0, WEIGHT_FRACTION):
            raise states.ParseError(f'Line {line_number}: coefficient {value} is not one of -1/16, 0, 1/16')
        if not numpy.isnan(out[x - 1, y - 1, z - 1]):
            raise states.ParseError(f'Line {line_number}: duplicate entry for ({x}, {y}, {z})')
        out[x - 1, y - 1, z - 1] = float(value)
    missing = int(numpy.isnan(out).sum())
    if missing:
        raise states.ParseError(f'{missing} coefficients are missing')
    return WitnessCoefficients(out, permutation if permutation is not None else basis.Permutation.identity())


def dumps_seesaw_report(summary: SeeSawSummary) -> str:
    """
    ``{seed, restarts, best_value, converged_fraction, iterations_histogram}`` as compact JSON.
    """
    import simplejson
    return str(simplejson.dumps(summary.to_builtin(), ensure_ascii=False, separators=(',', ':')))


def _unittest_witness_csv() -> None:
    import io
    from pytest import raises
    from ._coefficients import canonical_coefficients, witness_for_state

    bpd = witness_for_state(states.catalog(states.StateID.BPD))
    buf = io.StringIO()
    write_witness_csv(bpd, buf)
    text = buf.getvalue()
    assert text.startswith('x,y,z,w\n1,1,1,1/16\n')
    assert text.count('\n') == 4097
    assert read_witness_csv(io.StringIO(text)) == bpd

    with raises(states.ParseError):
        read_witness_csv(io.StringIO('a,b,c,d\n'))
    with raises(states.ParseError):
        read_witness_csv(io.StringIO('x,y,z,w\n1,1,1,1/8\n'))
    with raises(states.ParseError):
        read_witness_csv(io.StringIO('x,y,z,w\n1,1,1,1/16\n1,1,1,1/16\n'))
    with raises(states.ParseError):
        read_witness_csv(io.StringIO('x,y,z,w\n1,1,1,1/16\n'))
    with raises(states.ParseError):
        read_witness_csv(io.StringIO('x,y,z,w\n1,1,17,0\n'))
    assert canonical_coefficients().w[0, 0, 0] == WEIGHT
