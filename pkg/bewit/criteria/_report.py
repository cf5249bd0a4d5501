#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Assembles the criteria reports: one row per catalog state with the negativity, CCNR value and critical
visibilities, and the table of the high-dimensional re-preparation family.
"""

from __future__ import annotations
import math
import typing
import logging
import dataclasses
from .. import basis
from .. import states
from ._correlation import ccnr, trace_criterion
from ._ppt import negativity, is_ppt
from ._qfi import max_qfi, QFIResult, SEPARABLE_QFI_LIMIT
from ._threshold import v_threshold, v_pm_closed_form, DEFAULT_TOLERANCE
from ._reference import Source, V_LOC_REFERENCES, V_SEP_REFERENCES
from ._closed_forms import highdim_trace_criterion, highdim_ccnr


HIGHDIM_DIRECT_MAX_DIMENSION = 8
"""
Direct computations of the high-dimensional family are skipped above this local dimension.
"""

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class StateReport:
    """
    Criteria values of a single state. The critical visibilities refer to mixing with white noise;
    ``None`` means the criterion never fires on the family.
    """
    state: str
    negativity: float
    ppt: bool
    ccnr: float
    trace_criterion: float
    qfi_max: float
    qfi_hamiltonian: str
    v_pm: typing.Optional[float]
    v_metro: typing.Optional[float]


@dataclasses.dataclass(frozen=True)
class CatalogRow:
    state: states.StateID
    report: StateReport
    v_sep: typing.Optional[float]
    v_sep_source: typing.Optional[Source]
    v_loc: typing.Optional[float]
    v_loc_source: typing.Optional[Source]


def state_report(rho: states.DensityMatrix,
                 label: str,
                 permutation: typing.Optional[basis.Permutation] = None,
                 tolerance: float = DEFAULT_TOLERANCE) -> StateReport:
    """
    Evaluates every criterion on the state; the permutation relabels the B side of the trace criterion.
    ``v_pm`` uses the closed form, which assumes a Bloch-diagonal state;
    for other states it is the threshold of the CCNR criterion rather than of the witness.
    The trace criterion and the metrological quantities are defined for 4x4 states only and are NaN otherwise.
    """
    c = ccnr(rho)
    local = rho.dim_a == rho.dim_b == 4
    q = max_qfi(rho) if local else QFIResult(math.nan, '')
    v_metro: typing.Optional[float] = None
    if q.value > SEPARABLE_QFI_LIMIT:
        v_metro = v_threshold(lambda v: states.isotropic_mix(rho, v),
                              lambda r: max_qfi(r).value > SEPARABLE_QFI_LIMIT,
                              tolerance=tolerance).v_star
    return StateReport(
        state=label,
        negativity=negativity(rho, states.LOOSE_PSD_SLACK),
        ppt=is_ppt(rho, states.LOOSE_PSD_SLACK),
        ccnr=c,
        trace_criterion=trace_criterion(rho, permutation) if local else math.nan,
        qfi_max=q.value,
        qfi_hamiltonian=q.hamiltonian,
        v_pm=v_pm_closed_form(c) if c > 1 else None,
        v_metro=v_metro,
    )


def catalog_rows(tolerance: float = DEFAULT_TOLERANCE) -> typing.List[CatalogRow]:
    """
    One row per Bloch-diagonal reference state, in catalog order.

    The separability threshold is taken from the first applicable source: PPT bisection for NPT states,
    a published reference, or the CCNR threshold.
    """
    out: typing.List[CatalogRow] = []
    for sid in states.CATALOG_STATES:
        rho = states.catalog(sid)
        report = state_report(rho, sid.label, states.BLOCH_SPECS[sid].permutation, tolerance)
        v_sep: typing.Optional[float]
        v_sep_source: typing.Optional[Source]
        if not report.ppt:
            v_sep = v_threshold(lambda v: states.isotropic_mix(rho, v),
                                lambda r: not is_ppt(r),
                                tolerance=tolerance).v_star
            v_sep_source = Source.PPT
        elif sid in V_SEP_REFERENCES:
            v_sep, v_sep_source = V_SEP_REFERENCES[sid].value, V_SEP_REFERENCES[sid].source
        elif report.v_pm is not None:
            v_sep, v_sep_source = report.v_pm, Source.CCNR
        else:
            v_sep, v_sep_source = None, None
        ref = V_LOC_REFERENCES.get(sid)
        row = CatalogRow(
            state=sid,
            report=report,
            v_sep=v_sep,
            v_sep_source=v_sep_source,
            v_loc=ref.value if ref else None,
            v_loc_source=ref.source if ref else None,
        )
        _logger.info('%s: N=%.4f CCNR=%.4f v_pm=%s v_metro=%s v_sep=%s',
                     sid.label, report.negativity, report.ccnr, report.v_pm, report.v_metro, v_sep)
        out.append(row)
    return out


@dataclasses.dataclass(frozen=True)
class HighDimRow:
    """
    The BPD state mixed with white noise in ``dim⊗dim`` and passed through the re-preparation channel.
    Direct values are ``None`` for infinite or large dimensions.
    """
    v: float
    dim: float
    trace_criterion_formula: float
    trace_criterion_direct: typing.Optional[float]
    ccnr_formula: float
    ccnr_direct: typing.Optional[float]


def highdim_rows(v_grid: typing.Sequence[float], dims: typing.Sequence[float]) -> typing.List[HighDimRow]:
    """
    :raises: :class:`bewit.states.DomainError` for visibilities outside ``[0, 1]`` or dimensions below 4.
    """
    bpd = states.catalog(states.StateID.BPD)
    ground = states.basis_state(0)
    out: typing.List[HighDimRow] = []
    for dim in dims:
        for v in v_grid:
            s_formula = highdim_trace_criterion(v, dim)
            c_formula = highdim_ccnr(v, dim)
            s_direct: typing.Optional[float] = None
            c_direct: typing.Optional[float] = None
            if not math.isinf(dim) and dim <= HIGHDIM_DIRECT_MAX_DIMENSION:
                mixed = states.isotropic_mix(bpd, v, int(dim))
                s_direct = trace_criterion(states.reprepare_channel(mixed, ground, ground))
                c_direct = ccnr(mixed)
            out.append(HighDimRow(v, dim, s_formula, s_direct, c_formula, c_direct))
    return out


def _unittest_highdim_rows() -> None:
    from pytest import approx
    rows = highdim_rows([0.0, 0.5, 1.0], [4, 5, math.inf])
    assert len(rows) == 9
    for r in rows:
        if r.trace_criterion_direct is None:
            assert math.isinf(r.dim)
        else:
            assert r.trace_criterion_direct == approx(r.trace_criterion_formula, abs=1e-9)
            assert r.ccnr_direct == approx(r.ccnr_formula, abs=1e-9)
