#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Small helpers shared by all layers of the library.
"""

from ._introspect import import_submodules as import_submodules
from ._introspect import iter_descendants as iter_descendants

from ._repr import repr_attributes as repr_attributes
from ._repr import repr_array as repr_array
