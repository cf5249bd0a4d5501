#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import typing
from ._base import Command as Command, SubsystemFactory as SubsystemFactory


def get_available_command_classes() -> typing.Sequence[typing.Type[Command]]:
    import bewit._cli
    bewit.util.import_submodules(bewit._cli)
    # https://github.com/python/mypy/issues/5374
    return list(bewit.util.iter_descendants(Command))  # type: ignore
