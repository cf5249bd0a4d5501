#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Density matrices and their constructors: Bloch-diagonal assembly, the catalog of named states,
noise channels, validation, and JSON serialization.
"""

from ._error import InvalidStateError as InvalidStateError
from ._error import UnknownStateIDError as UnknownStateIDError
from ._error import DomainError as DomainError
from ._error import ParseError as ParseError

from ._density import DensityMatrix as DensityMatrix
from ._density import StateDiagnostics as StateDiagnostics
from ._density import validate_state as validate_state
from ._density import LOOSE_PSD_SLACK as LOOSE_PSD_SLACK

from ._bloch import BlochDiagonalSpec as BlochDiagonalSpec
from ._bloch import from_bloch_diagonal as from_bloch_diagonal

from ._catalog import StateID as StateID
from ._catalog import BLOCH_SPECS as BLOCH_SPECS
from ._catalog import CATALOG_STATES as CATALOG_STATES
from ._catalog import R6_PERMUTATION as R6_PERMUTATION
from ._catalog import R8_PERMUTATION as R8_PERMUTATION
from ._catalog import Q as Q, R1 as R1, R2 as R2, R3 as R3, R4 as R4, S1 as S1, S2 as S2, S3 as S3
from ._catalog import WERNER_LOC_P as WERNER_LOC_P
from ._catalog import DEFAULT_ASYM_VISIBILITY as DEFAULT_ASYM_VISIBILITY
from ._catalog import catalog as catalog
from ._catalog import werner as werner
from ._catalog import max_entangled as max_entangled
from ._catalog import bpd_from_bell_mixture as bpd_from_bell_mixture
from ._catalog import rho_3x3 as rho_3x3
from ._catalog import rho_3x3_correlations as rho_3x3_correlations
from ._catalog import RHO_3X3_DIAGONAL as RHO_3X3_DIAGONAL
from ._catalog import RHO_3X3_OFF_DIAGONAL as RHO_3X3_OFF_DIAGONAL
from ._catalog import rho_asym as rho_asym

from ._channels import embed as embed
from ._channels import isotropic_mix as isotropic_mix
from ._channels import reprepare_channel as reprepare_channel
from ._channels import basis_state as basis_state
from ._channels import MESSAGE_DIMENSION as MESSAGE_DIMENSION

from ._io import state_to_builtin as state_to_builtin
from ._io import state_from_builtin as state_from_builtin
from ._io import bloch_spec_to_builtin as bloch_spec_to_builtin
from ._io import bloch_spec_from_builtin as bloch_spec_from_builtin
from ._io import dumps_state as dumps_state
from ._io import loads_state as loads_state
from ._io import dumps_bloch_spec as dumps_bloch_spec
from ._io import loads_bloch_spec as loads_bloch_spec
from ._io import loads_state_or_spec as loads_state_or_spec
