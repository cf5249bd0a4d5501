#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import io
import typing
import argparse
import bewit
from ._base import Command
from ._subsystems.run_config import RunConfig
from ._util import add_state_argument, load_witness


class WitnessGenCommand(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['witness-gen', 'wg']

    @property
    def help(self) -> str:
        return '''
Build the witness coefficients adapted to a state (the signs of its diagonal
correlations under the state's relabeling) or the canonical witness, and
print them as CSV with the header x,y,z,w. The --format option is ignored
because the witness file format is fixed.
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
bewit witness-gen --state BPD --out bpd-witness.csv
bewit witness-gen --state canonical
'''.strip()

    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_state_argument(parser)

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        config, = subsystems
        assert isinstance(config, RunConfig)
        w = load_witness(args.state, args.visibility)
        buf = io.StringIO()
        bewit.witness.write_witness_csv(w, buf)
        config.emit(buf.getvalue())
        return 0
