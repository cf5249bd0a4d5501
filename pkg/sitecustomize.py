#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Loaded by every Python process started with the repository root on PYTHONPATH,
including the CLI processes spawned by the tests, so that their coverage is collected as well.
"""

import os
import sys
import pathlib

own_path = pathlib.Path(__file__).absolute()

try:
    import coverage  # The module may be missing during early stage setup, no need to abort everything.
except ImportError as ex:
    coverage = None
    print('COVERAGE NOT CONFIGURED:', ex, file=sys.stderr)
else:
    # https://coverage.readthedocs.io/en/coverage-5.0/subprocess.html
    os.environ.setdefault('COVERAGE_PROCESS_START', str(own_path.parent / 'setup.cfg'))
    coverage.process_startup()
