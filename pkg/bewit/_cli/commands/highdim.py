#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import math
import typing
import argparse
import bewit
from ._base import Command
from ._subsystems.run_config import RunConfig
from ._argparse_helpers import parse_float_list
from ._util import round_or_none


class HighDimCommand(Command):
    @property
    def names(self) -> typing.Sequence[str]:
        return ['highdim']

    @property
    def help(self) -> str:
        return f'''
Tabulate the BPD state mixed with white noise in D x D and sent through the
local channel that keeps the 4 x 4 block and re-prepares |0><0| otherwise.
For every visibility v and dimension D the trace criterion and the CCNR
value are given by their closed forms and, for finite D up to
{bewit.criteria.HIGHDIM_DIRECT_MAX_DIMENSION}, by direct computation. D may be "inf".
'''.strip()

    @property
    def examples(self) -> typing.Optional[str]:
        return '''
bewit highdim
bewit highdim --v-grid 0.5,0.7,0.9 --dims 4,8,inf
'''.strip()

    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            '--v-grid',
            type=parse_float_list,
            default=parse_float_list('0:1:21'),
            metavar='LIST',
            help='Visibilities: comma-separated values or start:stop:count. Default: 0:1:21',
        )
        parser.add_argument(
            '--dims',
            type=parse_float_list,
            default=parse_float_list('4,5,6,inf'),
            metavar='LIST',
            help='Local dimensions, at least 4, comma-separated; "inf" is accepted. Default: 4,5,6,inf',
        )

    def execute(self, args: argparse.Namespace, subsystems: typing.Sequence[object]) -> int:
        config, = subsystems
        assert isinstance(config, RunConfig)
        rows = bewit.criteria.highdim_rows(args.v_grid, args.dims)
        config.emit_rows([
            {
                'v': round_or_none(r.v),
                'dim': 'inf' if math.isinf(r.dim) else int(r.dim),
                'trace_criterion_formula': round_or_none(r.trace_criterion_formula),
                'trace_criterion_direct': round_or_none(r.trace_criterion_direct),
                'ccnr_formula': round_or_none(r.ccnr_formula),
                'ccnr_direct': round_or_none(r.ccnr_direct),
            }
            for r in rows
        ])
        return 0
