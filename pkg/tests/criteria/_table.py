#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import math
import typing
import pytest
import bewit
from bewit.states import StateID, catalog
from bewit.criteria import Source


Rows = typing.Dict[StateID, bewit.criteria.CatalogRow]


NEGATIVITY = {
    StateID.ME: 1.5,
    StateID.WERNER_AS: 0.25,
    StateID.WERNER_LOC: 0.1471,
    StateID.R6: 0.0,
    StateID.R8: 0.0,
    StateID.BPD: 0.0,
    StateID.SENTIS: 0.0,
}

CCNR = {
    StateID.ME: 4.0,
    StateID.WERNER_AS: 1.5,
    StateID.WERNER_LOC: 1.0882,
    StateID.R6: 1.0858,
    StateID.R8: 1.0858,
    StateID.BPD: 1.5,
    StateID.SENTIS: 1.0856,
}

V_PM = {
    StateID.ME: 0.2,
    StateID.WERNER_AS: 0.6,
    StateID.WERNER_LOC: 0.8947,
    StateID.R6: 0.8974,
    StateID.R8: 0.8974,
    StateID.BPD: 0.6,
    StateID.SENTIS: 0.8976,
}

V_METRO = {
    StateID.ME: (7 + math.sqrt(113)) / 32,
    StateID.WERNER_AS: 0.8496,
    StateID.R6: 0.9183,
    StateID.R8: 0.9183,
}


@pytest.fixture(scope='module')
def rows() -> Rows:
    return {r.state: r for r in bewit.criteria.catalog_rows()}


def _unittest_negativity_column(rows: Rows) -> None:
    for sid, expected in NEGATIVITY.items():
        assert rows[sid].report.negativity == pytest.approx(expected, abs=5e-4), sid
        assert rows[sid].report.ppt == (expected == 0.0), sid


def _unittest_ccnr_column(rows: Rows) -> None:
    for sid, expected in CCNR.items():
        assert rows[sid].report.ccnr == pytest.approx(expected, abs=5e-4), sid
        assert rows[sid].report.trace_criterion == pytest.approx(rows[sid].report.ccnr, abs=1e-9), sid
        assert rows[sid].report.v_pm == pytest.approx(V_PM[sid], abs=5e-4), sid


def _unittest_metrology_column(rows: Rows) -> None:
    for sid in bewit.states.CATALOG_STATES:
        report = rows[sid].report
        if sid in V_METRO:
            assert report.qfi_max > bewit.criteria.SEPARABLE_QFI_LIMIT
            assert report.v_metro == pytest.approx(V_METRO[sid], abs=5e-4), sid
        else:
            assert report.qfi_max < bewit.criteria.SEPARABLE_QFI_LIMIT
            assert report.v_metro is None, sid
    assert rows[StateID.ME].report.qfi_max == pytest.approx(16)
    assert rows[StateID.ME].report.qfi_hamiltonian == 'I⊗Z'
    assert rows[StateID.R6].report.qfi_max == pytest.approx(32 - 16 * math.sqrt(2), abs=1e-6)
    assert rows[StateID.R8].report.qfi_max == pytest.approx(32 - 16 * math.sqrt(2), abs=1e-6)
    assert rows[StateID.BPD].report.qfi_max == pytest.approx(16 / 3, abs=5e-4)
    assert rows[StateID.WERNER_LOC].report.qfi_max == pytest.approx(5.2271, abs=5e-4)


def _unittest_separability_column(rows: Rows) -> None:
    expected = {
        StateID.ME: (0.2, Source.PPT),
        StateID.WERNER_AS: (0.2, Source.PPT),
        StateID.WERNER_LOC: (0.2983, Source.PPT),
        StateID.R6: (0.7446, Source.REFERENCE),
        StateID.R8: (0.7446, Source.REFERENCE),
        StateID.BPD: (0.6, Source.CCNR),
        StateID.SENTIS: (0.7814, Source.REFERENCE),
    }
    for sid, (value, source) in expected.items():
        assert rows[sid].v_sep == pytest.approx(value, abs=1e-4), sid
        assert rows[sid].v_sep_source == source, sid


def _unittest_locality_column(rows: Rows) -> None:
    expected = {
        StateID.ME: 0.3611,
        StateID.WERNER_AS: 0.75,
        StateID.WERNER_LOC: 1.0,
    }
    for sid in bewit.states.CATALOG_STATES:
        if sid in expected:
            assert rows[sid].v_loc == pytest.approx(expected[sid], abs=1e-4), sid
            assert rows[sid].v_loc_source == Source.REFERENCE
        else:
            assert rows[sid].v_loc is None
            assert rows[sid].v_loc_source is None


def _unittest_ppt_thresholds_by_bisection() -> None:
    def threshold(sid: StateID) -> float:
        rho = catalog(sid)
        return bewit.criteria.v_threshold(lambda v: bewit.states.isotropic_mix(rho, v),
                                          lambda r: not bewit.criteria.is_ppt(r)).v_star

    assert threshold(StateID.ME) == pytest.approx(0.2, abs=1e-4)
    assert threshold(StateID.WERNER_AS) == pytest.approx(0.2, abs=1e-4)
    assert threshold(StateID.WERNER_LOC) == pytest.approx(0.2983, abs=1e-4)

    with pytest.raises(bewit.criteria.BracketError):
        threshold(StateID.BPD)


def _unittest_bisection_agrees_with_closed_form() -> None:
    bpd = catalog(StateID.BPD)
    result = bewit.criteria.v_threshold(lambda v: bewit.states.isotropic_mix(bpd, v),
                                        lambda r: bewit.criteria.ccnr(r) > 1)
    assert result.v_star == pytest.approx(0.6, abs=1e-4)
    assert result.bracket_width <= 1e-6
