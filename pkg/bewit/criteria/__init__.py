#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Entanglement criteria and critical visibilities: correlation tensors, the CCNR and trace criteria,
negativity and PPT, quantum Fisher information, bisection on one-parameter families, closed forms,
and the assembled reports.
"""

from ._error import BracketError as BracketError

from ._correlation import CorrelationTensor as CorrelationTensor
from ._correlation import correlation_tensor as correlation_tensor
from ._correlation import pauli_correlation_tensor as pauli_correlation_tensor
from ._correlation import ccnr as ccnr
from ._correlation import diagonal_correlations as diagonal_correlations
from ._correlation import trace_criterion as trace_criterion
from ._correlation import trace_criterion_witness as trace_criterion_witness

from ._ppt import min_pt_eigenvalue as min_pt_eigenvalue
from ._ppt import negativity as negativity
from ._ppt import is_ppt as is_ppt

from ._qfi import SEPARABLE_QFI_LIMIT as SEPARABLE_QFI_LIMIT
from ._qfi import METROLOGY_HAMILTONIANS as METROLOGY_HAMILTONIANS
from ._qfi import QFIResult as QFIResult
from ._qfi import local_hamiltonian as local_hamiltonian
from ._qfi import qfi as qfi
from ._qfi import max_qfi as max_qfi
from ._qfi import is_metrologically_useful as is_metrologically_useful

from ._threshold import ThresholdResult as ThresholdResult
from ._threshold import v_threshold as v_threshold
from ._threshold import v_pm_closed_form as v_pm_closed_form

from ._closed_forms import BPD_CCNR as BPD_CCNR
from ._closed_forms import highdim_trace_criterion as highdim_trace_criterion
from ._closed_forms import highdim_ccnr as highdim_ccnr
from ._closed_forms import reprepared_isotropic_ccnr as reprepared_isotropic_ccnr
from ._closed_forms import asym_trace_criterion as asym_trace_criterion
from ._closed_forms import asym_ccnr as asym_ccnr

from ._reference import Source as Source
from ._reference import ReferenceValue as ReferenceValue
from ._reference import V_LOC_REFERENCES as V_LOC_REFERENCES
from ._reference import V_SEP_REFERENCES as V_SEP_REFERENCES
from ._reference import reference_values as reference_values

from ._report import StateReport as StateReport
from ._report import CatalogRow as CatalogRow
from ._report import HighDimRow as HighDimRow
from ._report import HIGHDIM_DIRECT_MAX_DIMENSION as HIGHDIM_DIRECT_MAX_DIMENSION
from ._report import state_report as state_report
from ._report import catalog_rows as catalog_rows
from ._report import highdim_rows as highdim_rows
