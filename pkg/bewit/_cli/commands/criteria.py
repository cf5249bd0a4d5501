#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import typing
import logging
import argparse
import bewit
from ._base import Command
from ._subsystems.run_config import RunConfig
from ._util import add_state_argument, load_state, round_or_none


_logger = logging.getLogger(__name__)


class CriteriaCommand(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['criteria']

    @property
    def help(self) -> str:
        return '''
Evaluate the entanglement criteria on a single state: negativity and PPT,
the CCNR value, the trace criterion, the maximal quantum Fisher information
over the local Hamiltonians, the critical visibilities of the witness and
of metrological usefulness, and the value of the state's own witness
obtained by simulating the protocol.
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
bewit criteria --state Werner-loc
bewit criteria --state asym --visibility 0.7 -F yaml
'''.strip()

    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_state_argument(parser)

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        config, = subsystems
        assert isinstance(config, RunConfig)
        rho, permutation = load_state(args.state, args.visibility)
        report = bewit.criteria.state_report(rho, args.state, permutation)
        q: typing.Optional[float] = None
        if rho.dim_a == rho.dim_b == bewit.states.MESSAGE_DIMENSION:
            q = bewit.witness.entangled_value(rho, bewit.witness.witness_for_state(rho, permutation))
            _logger.info('Witness value %.9f against the separable value %.1f', q, bewit.witness.SEPARABLE_BOUND)
        config.emit_rows([{
            'state': report.state,
            'negativity': round_or_none(report.negativity),
            'ppt': report.ppt,
            'ccnr': round_or_none(report.ccnr),
            'trace_criterion': round_or_none(report.trace_criterion),
            'qfi_max': round_or_none(report.qfi_max),
            'qfi_hamiltonian': report.qfi_hamiltonian or None,
            'v_pm': round_or_none(report.v_pm, 6),
            'v_metro': round_or_none(report.v_metro, 6),
            'witness_value': round_or_none(q),
        }])
        return 0
