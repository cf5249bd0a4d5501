#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
The lowest layer of the library: dense matrix primitives, numerical tolerances, and the root exception type.
"""

from ._error import BewitError as BewitError
from ._error import NotHermitianError as NotHermitianError
from ._error import DimensionMismatchError as DimensionMismatchError

from ._matops import HERMITICITY_TOLERANCE as HERMITICITY_TOLERANCE
from ._matops import PSD_SLACK as PSD_SLACK
from ._matops import EQUALITY_TOLERANCE as EQUALITY_TOLERANCE
from ._matops import Subsystem as Subsystem
from ._matops import kron as kron
from ._matops import hermiticity_defect as hermiticity_defect
from ._matops import hermitian_eig as hermitian_eig
from ._matops import eigvalsh as eigvalsh
from ._matops import trace_norm as trace_norm
from ._matops import partial_transpose as partial_transpose
from ._matops import partial_trace as partial_trace
from ._matops import is_unitary as is_unitary
