#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import io
import csv
import math
import typing
import pathlib
import numpy
import pytest
import simplejson
import bewit
from ._subprocess import run_cli_tool


def _json_rows(text: str) -> typing.List[typing.Dict[str, typing.Any]]:
    return [simplejson.loads(line) for line in text.splitlines() if line.strip()]


def _unittest_states(tmp_path: pathlib.Path) -> None:
    rows = list(csv.DictReader(io.StringIO(run_cli_tool('states', timeout=30.0))))
    assert [r['state'] for r in rows] == [s.label for s in bewit.states.StateID]
    assert all(r['valid'] == 'true' for r in rows)
    assert [r['bloch_diagonal'] for r in rows] == ['true'] * 7 + ['false'] * 2

    path = tmp_path / 'bpd.json'
    run_cli_tool('states', '--state', 'BPD', '--out', str(path), timeout=30.0)
    rho = bewit.states.loads_state(path.read_text())
    assert numpy.array_equal(rho.matrix, bewit.states.catalog(bewit.states.StateID.BPD).matrix)

    spec = bewit.states.loads_bloch_spec(run_cli_tool('states', '--state', 'R6', '--bloch', timeout=30.0))
    assert spec == bewit.states.BLOCH_SPECS[bewit.states.StateID.R6]


def _unittest_criteria(tmp_path: pathlib.Path) -> None:
    row, = _json_rows(run_cli_tool('criteria', '--state', 'BPD', '-F', 'json', timeout=60.0))
    assert row['state'] == 'BPD'
    assert row['ppt'] is True
    assert row['ccnr'] == pytest.approx(1.5)
    assert row['trace_criterion'] == pytest.approx(1.5)
    assert row['v_pm'] == pytest.approx(0.6)
    assert row['v_metro'] is None
    assert row['witness_value'] == pytest.approx(96)

    # A Bloch-diagonal specification loaded from a file carries its relabeling.
    path = tmp_path / 'r6.json'
    path.write_text(bewit.states.dumps_bloch_spec(bewit.states.BLOCH_SPECS[bewit.states.StateID.R6]))
    row, = _json_rows(run_cli_tool('criteria', '--state', str(path), '-F', 'json', timeout=60.0))
    assert row['trace_criterion'] == pytest.approx(1.0858, abs=1e-4)
    assert row['witness_value'] == pytest.approx(64 * row['trace_criterion'], abs=1e-6)

    text = run_cli_tool('criteria', '--state', 'asym', '--visibility', '0.7', '-F', 'yaml', timeout=60.0)
    assert text.startswith('---\nstate: asym\n')


def _unittest_witness_gen(tmp_path: pathlib.Path) -> None:
    path = tmp_path / 'w.csv'
    run_cli_tool('witness-gen', '--state', 'BPD', '--out', str(path), timeout=30.0)
    with open(path, newline='') as f:
        w = bewit.witness.read_witness_csv(f)
    assert w == bewit.witness.witness_for_state(bewit.states.catalog(bewit.states.StateID.BPD))

    text = run_cli_tool('wg', '--state', 'canonical', timeout=30.0)
    assert bewit.witness.read_witness_csv(io.StringIO(text)) == bewit.witness.canonical_coefficients()


def _unittest_simulate() -> None:
    row, = _json_rows(run_cli_tool('simulate', '--state', 'BPD', '--summary', '-F', 'json', timeout=60.0))
    assert row['witness_value'] == pytest.approx(96)
    assert row['closed_form'] == pytest.approx(96)
    assert row['separable_bound'] == 64

    # The correlator rows are followed by the summary block in the same output.
    correlators, summary = run_cli_tool('sim', '--state', 'ME', timeout=60.0).split('\n\n')
    rows = list(csv.DictReader(io.StringIO(correlators)))
    assert len(rows) == 16 ** 3
    assert (rows[0]['x'], rows[0]['y'], rows[0]['z']) == ('1', '1', '1')
    total = sum(float(r['w']) * float(r['E']) for r in rows)
    assert total == pytest.approx(256, abs=1e-6)
    row, = list(csv.DictReader(io.StringIO(summary)))
    assert row['state'] == 'ME'
    assert float(row['witness_value']) == pytest.approx(float(row['closed_form']), abs=1e-8)
    assert float(row['witness_value']) == pytest.approx(256, abs=1e-8)

    correlators, summary = run_cli_tool('sim', '--state', 'BPD', '-F', 'json', timeout=60.0).split('\n\n')
    assert len(_json_rows(correlators)) == 16 ** 3
    row, = _json_rows(summary)
    assert row['witness_value'] == pytest.approx(row['closed_form'], abs=1e-8)
    assert row['closed_form'] == pytest.approx(96, abs=1e-8)


def _unittest_seesaw() -> None:
    args = ('seesaw', '--restarts', '4', '--max-iter', '50', '--seed', '11')
    first = simplejson.loads(run_cli_tool(*args, timeout=120.0))
    second = simplejson.loads(run_cli_tool(*args, timeout=120.0, environment_variables={'BEWIT_THREADS': '1'}))
    assert first == second
    assert first['seed'] == 11
    assert first['restarts'] == 4
    assert first['best_value'] <= 64 + 1e-6
    assert sum(first['iterations_histogram'].values()) == 4

    classical = simplejson.loads(run_cli_tool('seesaw', '--classical', '--restarts', '4', timeout=120.0))
    assert classical['best_value'] <= 64 + 1e-6

    # Defaults: 200 restarts seeded with 42; the best of them is the separable value.
    default = simplejson.loads(run_cli_tool('seesaw', timeout=1800.0))
    assert (default['seed'], default['restarts']) == (42, 200)
    assert default['best_value'] == pytest.approx(64, abs=1e-6)
    assert default['best_value'] <= 64 + 1e-6


def _unittest_table2() -> None:
    rows = _json_rows(run_cli_tool('table2', '-F', 'json', '--bisection-tol', '1e-5', timeout=120.0))
    assert [r['state'] for r in rows] == [s.label for s in bewit.states.CATALOG_STATES]
    bpd = rows[5]
    assert bpd['v_sep'] == pytest.approx(0.6, abs=1e-4)
    assert bpd['v_sep_source'] == 'ccnr'
    assert bpd['v_loc'] is None
    assert rows[0]['v_sep_source'] == 'ppt'
    assert rows[0]['v_pm_source'] == 'computed'


def _unittest_highdim() -> None:
    rows = list(csv.DictReader(io.StringIO(run_cli_tool('highdim', '--v-grid', '0:1:3', '--dims', '4,inf',
                                                        timeout=60.0))))
    assert [(r['v'], r['dim']) for r in rows] == [
        ('0.0', '4'), ('0.5', '4'), ('1.0', '4'), ('0.0', 'inf'), ('0.5', 'inf'), ('1.0', 'inf'),
    ]
    for r in rows[:3]:
        assert float(r['trace_criterion_direct']) == pytest.approx(float(r['trace_criterion_formula']), abs=1e-8)
    for r in rows[3:]:
        assert r['trace_criterion_direct'] == '-'
    assert float(rows[4]['trace_criterion_formula']) == pytest.approx(1 + 0.5 / 3)
    assert not math.isnan(float(rows[5]['ccnr_formula']))
