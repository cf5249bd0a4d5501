#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from ..linalg import BewitError


class IndexOutOfRangeError(BewitError):
    """
    A Pauli index or a flat operator index is outside of its valid range.
    """
    pass


class InvalidPermutationError(BewitError):
    """
    The supplied index mapping is not a bijection on ``{1..n}``.
    """
    pass


class InvalidDimensionError(BewitError):
    """
    The requested local dimension is not supported (e.g., an operator basis for dimension less than 2).
    """
    pass
