#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from ..linalg import BewitError


class NotUnitaryError(BewitError):
    """
    An encoding operation is not unitary within :data:`bewit.linalg.EQUALITY_TOLERANCE`.
    """
    pass


class SpectrumOutOfRangeError(BewitError):
    """
    A measurement observable has an eigenvalue outside ``[-1, +1]``, so it does not describe a two-outcome
    measurement.
    """
    pass


class InvalidStrategyError(BewitError):
    """
    A prepare-and-measure strategy is malformed: wrong shapes, invalid preparation states,
    or observables that are not contractions.
    """
    pass
