#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from ..linalg import BewitError


class BracketError(BewitError):
    """
    A threshold search was started on an interval whose endpoints do not straddle the predicate flip:
    the predicate must be false at the lower end and true at the upper end.
    """
    pass
