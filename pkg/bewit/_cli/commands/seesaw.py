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
from ._util import load_witness, CANONICAL_WITNESS


_logger = logging.getLogger(__name__)


class SeeSawCommand(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['seesaw']

    @property
    def help(self) -> str:
        return f'''
Search for the largest witness value attainable without shared
entanglement by alternating optimization from random starting points.
The report is a JSON object with the fields seed, restarts, best_value,
converged_fraction, iterations_histogram; the --format option is ignored.
The restarts run on a thread pool whose size can be capped with the
environment variable {bewit.witness.THREADS_ENV_VAR}; the result does not
depend on the pool size.
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
bewit seesaw
bewit seesaw --classical --restarts 50
bewit seesaw --witness bpd-witness.csv --seed 1
'''.strip()

    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            '--witness', '-w',
            default=CANONICAL_WITNESS,
            metavar='NAME_OR_PATH',
            help='''
The witness to optimize: "canonical", a CSV file as produced by
witness-gen, or a catalog state whose own witness is to be used.
Default: %(default)s
'''.strip())
        parser.add_argument(
            '--classical',
            action='store_true',
            help='Restrict the messages to classical ones (computational basis states).',
        )

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        config, = subsystems
        assert isinstance(config, RunConfig)
        w = load_witness(args.witness)
        summary = bewit.witness.run_seesaw(w, config.seesaw, classical=args.classical)
        best = summary.best
        if best.value > bewit.witness.SEPARABLE_BOUND + 1e-6:
            _logger.warning('Restart %d exceeded the separable value: %.9f', best.restart_index, best.value)
        config.emit(bewit.witness.dumps_seesaw_report(summary) + '\n')
        return 0
