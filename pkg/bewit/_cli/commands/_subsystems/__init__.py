#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from ._base import SubsystemFactory as SubsystemFactory

from . import formatter as formatter
from . import run_config as run_config
