#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import pytest
import subprocess
from ._subprocess import run_cli_tool, REPOSITORY_ROOT


def _unittest_trivial() -> None:
    version = (REPOSITORY_ROOT / 'bewit' / 'VERSION').read_text().strip()
    assert run_cli_tool('--version', timeout=10.0).strip().endswith(version)

    with pytest.raises(subprocess.CalledProcessError):
        run_cli_tool(timeout=10.0)

    with pytest.raises(subprocess.CalledProcessError):
        run_cli_tool('invalid-command', timeout=10.0)

    # Inputs rejected by the library share the exit code of argparse usage errors.
    with pytest.raises(subprocess.CalledProcessError) as ex:
        run_cli_tool('criteria', '--state', 'GHZ', timeout=10.0)
    assert ex.value.returncode == 2

    with pytest.raises(subprocess.CalledProcessError) as ex:
        run_cli_tool('seesaw', '--restarts', '0', timeout=10.0)
    assert ex.value.returncode == 2

    with pytest.raises(subprocess.CalledProcessError) as ex:
        run_cli_tool('simulate', '--state', 'no-such-file.json', timeout=10.0)
    assert ex.value.returncode == 1
