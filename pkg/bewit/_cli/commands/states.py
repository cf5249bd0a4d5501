#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import typing
import argparse
import numpy
import bewit
from ._base import Command
from ._subsystems.run_config import RunConfig
from ._util import add_state_argument, load_state, round_or_none


class StatesCommand(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['states']

    @property
    def help(self) -> str:
        return '''
Without --state, list the state catalog with basic properties of every
entry. With --state, print the state as JSON: the density matrix, or the
Bloch-diagonal specification if --bloch is given. The JSON output can be
fed back into any command that accepts --state.
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
bewit states
bewit states --state BPD --out bpd.json
bewit states --state R6 --bloch
'''.strip()

    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_state_argument(parser, required=False)
        parser.add_argument(
            '--bloch',
            action='store_true',
            help='Print the Bloch-diagonal specification instead of the matrix (catalog table states only).',
        )

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        config, = subsystems
        assert isinstance(config, RunConfig)
        if args.state is None:
            config.emit_rows([_describe(sid, args.visibility) for sid in bewit.states.StateID])
            return 0
        if args.bloch:
            sid = bewit.states.StateID.parse(args.state)
            if sid not in bewit.states.BLOCH_SPECS:
                raise bewit.states.UnknownStateIDError(f'{sid.label} has no Bloch-diagonal specification')
            config.emit(bewit.states.dumps_bloch_spec(bewit.states.BLOCH_SPECS[sid]) + '\n')
        else:
            rho, _ = load_state(args.state, args.visibility)
            config.emit(bewit.states.dumps_state(rho) + '\n')
        return 0


def _describe(sid: bewit.states.StateID, visibility: float) -> typing.Dict[str, typing.Any]:
    rho, _ = load_state(sid.label, visibility)
    diag = bewit.states.validate_state(rho, slack=bewit.states.LOOSE_PSD_SLACK)
    eig = bewit.linalg.eigvalsh(rho.matrix)
    return {
        'state': sid.label,
        'bloch_diagonal': sid in bewit.states.BLOCH_SPECS,
        'rank': int(numpy.sum(eig > 1e-9)),
        'purity': round_or_none(float(numpy.trace(rho.matrix @ rho.matrix).real)),
        'min_eigenvalue': round_or_none(diag.min_eigenvalue),
        'valid': diag.passed,
    }
