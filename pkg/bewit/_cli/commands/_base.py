#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import abc
import typing
import argparse
import bewit
from ._subsystems import SubsystemFactory as SubsystemFactory
from ._subsystems.run_config import RunConfigFactory


class Command(abc.ABC):
    """
    A subcommand of the tool. Subclasses are discovered automatically and instantiated without arguments.
    Every command writes its report through the run configuration it receives as its only subsystem.
    """
    @property
    @abc.abstractmethod
    def names(self) -> typing.Sequence[str]:
        """
        The main name first, then the aliases.
        """
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def help(self) -> str:
        """
        What the command computes; lines of at most 80 characters.
        """
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def examples(self) -> typing.Optional[str]:
        """
        Example invocations, one per line; lines of at most 80 characters.
        """
        raise NotImplementedError

    @property
    def subsystem_factories(self) -> typing.Sequence[SubsystemFactory]:
        """
        Factories of the objects passed to :meth:`execute`; the run configuration by default.
        """
        return [RunConfigFactory()]

    @abc.abstractmethod
    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        """
        Adds the arguments specific to this command; the shared ones come from the subsystem factories.
        """
        raise NotImplementedError

    @abc.abstractmethod
    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        """
        Computes and emits the report. Returns the exit code.
        """
        raise NotImplementedError

    def __repr__(self) -> str:
        return bewit.util.repr_attributes(self, names=self.names)
