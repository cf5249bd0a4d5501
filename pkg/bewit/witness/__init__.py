#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Prepare-and-measure witnesses for four-dimensional messages: coefficient construction,
simulation of the entanglement-assisted protocol, fixed strategies without entanglement,
and the see-saw search for the separable and classical maxima.
"""

from ._error import NotUnitaryError as NotUnitaryError
from ._error import SpectrumOutOfRangeError as SpectrumOutOfRangeError
from ._error import InvalidStrategyError as InvalidStrategyError

from ._coefficients import WEIGHT as WEIGHT
from ._coefficients import ZERO_CORRELATION_CUTOFF as ZERO_CORRELATION_CUTOFF
from ._coefficients import WitnessCoefficients as WitnessCoefficients
from ._coefficients import witness_coefficients as witness_coefficients
from ._coefficients import canonical_coefficients as canonical_coefficients
from ._coefficients import witness_for_state as witness_for_state

from ._encoding import SPECTRUM_TOLERANCE as SPECTRUM_TOLERANCE
from ._encoding import SEPARABLE_BOUND as SEPARABLE_BOUND
from ._encoding import SEPARABLE_LOWER_BOUND as SEPARABLE_LOWER_BOUND
from ._encoding import PauliEncoding as PauliEncoding
from ._encoding import WitnessScalars as WitnessScalars
from ._encoding import pauli_encoding as pauli_encoding
from ._encoding import correlator as correlator
from ._encoding import simulate_correlators as simulate_correlators
from ._encoding import entangled_value as entangled_value
from ._encoding import effective_operator as effective_operator

from ._strategy import PMStrategy as PMStrategy
from ._strategy import observable_field as observable_field
from ._strategy import optimal_observables as optimal_observables
from ._strategy import evaluate_witness as evaluate_witness
from ._strategy import product_strategy as product_strategy
from ._strategy import classical_strategy as classical_strategy

from ._seesaw import THREADS_ENV_VAR as THREADS_ENV_VAR
from ._seesaw import SeeSawConfig as SeeSawConfig
from ._seesaw import SeeSawOutcome as SeeSawOutcome
from ._seesaw import SeeSawSummary as SeeSawSummary
from ._seesaw import run_seesaw as run_seesaw
from ._seesaw import seesaw_separable as seesaw_separable
from ._seesaw import seesaw_classical as seesaw_classical

from ._io import CSV_HEADER as CSV_HEADER
from ._io import write_witness_csv as write_witness_csv
from ._io import read_witness_csv as read_witness_csv
from ._io import dumps_seesaw_report as dumps_seesaw_report
