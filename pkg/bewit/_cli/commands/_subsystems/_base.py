#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import abc
import argparse


class SubsystemFactory(abc.ABC):
    """
    Turns a group of command line options shared by several commands into one object.
    """
    @abc.abstractmethod
    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        """
        Adds the options of this group.
        """
        raise NotImplementedError

    @abc.abstractmethod
    def construct_subsystem(self, args: argparse.Namespace) -> object:
        """
        Builds the object handed to the command from the parsed options.
        """
        raise NotImplementedError
