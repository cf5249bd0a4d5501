#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import typing
import argparse
import bewit
from ._base import Command
from ._subsystems.run_config import RunConfig
from ._util import round_or_none


class Table2Command(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['table2']

    @property
    def help(self) -> str:
        return '''
Compute the criteria table of the Bloch-diagonal reference states: the
negativity, the CCNR value, and the critical visibilities under white noise
for detection by the witness (v_pm), for metrological usefulness (v_metro),
for entanglement (v_sep) and for nonlocality (v_loc). Every threshold
carries a source tag: "computed", "ppt" (PPT bisection), "ccnr" (tight
CCNR threshold) or "reference" (a published value that is not computed).
Blank cells mean that the criterion never fires on the family.
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
bewit table2
bewit table2 -F json --out table2.jsonl
'''.strip()

    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            '--bisection-tol',
            type=float,
            default=1e-6,
            help='Bracket width at which the threshold bisections stop. Default: %(default)s',
        )

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        config, = subsystems
        assert isinstance(config, RunConfig)
        rows = bewit.criteria.catalog_rows(tolerance=float(args.bisection_tol))
        computed = bewit.criteria.Source.COMPUTED
        config.emit_rows([
            {
                'state': r.state.label,
                'negativity': round_or_none(r.report.negativity),
                'ccnr': round_or_none(r.report.ccnr),
                'v_pm': round_or_none(r.report.v_pm, 6),
                'v_pm_source': computed if r.report.v_pm is not None else None,
                'qfi_max': round_or_none(r.report.qfi_max),
                'qfi_hamiltonian': r.report.qfi_hamiltonian,
                'v_metro': round_or_none(r.report.v_metro, 6),
                'v_metro_source': computed if r.report.v_metro is not None else None,
                'v_sep': round_or_none(r.v_sep, 6),
                'v_sep_source': r.v_sep_source,
                'v_loc': round_or_none(r.v_loc, 6),
                'v_loc_source': r.v_loc_source,
            }
            for r in rows
        ])
        return 0
