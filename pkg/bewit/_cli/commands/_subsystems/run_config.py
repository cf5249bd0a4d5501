#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import sys
import typing
import logging
import pathlib
import argparse
import dataclasses
import bewit
from .._argparse_helpers import make_enum_action
from .formatter import Format, Formatter, Row, make_formatter
from ._base import SubsystemFactory


_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """
    The options shared by all commands.
    """
    seed: int = 42
    restarts: int = 200
    tolerance: float = 1e-10
    max_iterations: int = 500
    out_path: typing.Optional[pathlib.Path] = None
    format: Format = Format.CSV

    @property
    def seesaw(self) -> bewit.witness.SeeSawConfig:
        return bewit.witness.SeeSawConfig(seed=self.seed,
                                          restarts=self.restarts,
                                          max_iterations=self.max_iterations,
                                          tolerance=self.tolerance)

    @property
    def formatter(self) -> Formatter:
        return make_formatter(self.format)

    def emit_rows(self, rows: typing.Sequence[Row]) -> None:
        self.emit(self.formatter(rows))

    def emit_blocks(self, *blocks: typing.Sequence[Row]) -> None:
        """
        Several reports with different columns in one output, separated by blank lines.
        """
        fmt = self.formatter
        self.emit('\n'.join(fmt(b) for b in blocks))

    def emit(self, text: str) -> None:
        """
        Writes the report into the output file if one is configured, otherwise into stdout.
        """
        if self.out_path is None:
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            self.out_path.write_text(text, encoding='utf8')
            _logger.info('Report written into %s (%d bytes)', self.out_path, len(text))


class RunConfigFactory(SubsystemFactory):
    def register_arguments(self, parser: argparse.ArgumentParser) -> None:
        defaults = RunConfig()
        parser.add_argument(
            '--seed',
            type=int,
            default=defaults.seed,
            help='''
Seed of the random restarts. Every restart derives its own generator from
the pair (seed, restart index), so the results do not depend on the number
of worker threads.
Default: %(default)s
'''.strip())
        parser.add_argument(
            '--restarts',
            type=int,
            default=defaults.restarts,
            help='Number of random restarts of the see-saw search. Default: %(default)s',
        )
        parser.add_argument(
            '--tol',
            type=float,
            default=defaults.tolerance,
            help='''
Relative convergence tolerance of the see-saw search.
Default: %(default)s
'''.strip())
        parser.add_argument(
            '--max-iter',
            type=int,
            default=defaults.max_iterations,
            help='Iteration limit per see-saw restart. Default: %(default)s',
        )
        parser.add_argument(
            '--out', '-O',
            metavar='PATH',
            type=pathlib.Path,
            help='Write the report into this file instead of stdout.',
        )
        # noinspection PyTypeChecker
        parser.add_argument(
            '--format', '-F',
            default=defaults.format,
            action=make_enum_action(Format),
            help='''
The format of the report. CSV has one header line and renders blank cells
as "-"; JSON is optimized for machine parsing, strictly one object per line;
YAML emits one document per row, separated by "---".
Default: %(default)s
'''.strip())

    def construct_subsystem(self, args: argparse.Namespace) -> RunConfig:
        out = RunConfig(
            seed=int(args.seed),
            restarts=int(args.restarts),
            tolerance=float(args.tol),
            max_iterations=int(args.max_iter),
            out_path=args.out,
            format=args.format,
        )
        _logger.debug('Run configuration: %r', out)
        return out


def _unittest_run_config() -> None:
    parser = argparse.ArgumentParser()
    RunConfigFactory().register_arguments(parser)
    cfg = RunConfigFactory().construct_subsystem(parser.parse_args([]))
    assert cfg == RunConfig()
    assert cfg.seesaw == bewit.witness.SeeSawConfig()

    cfg = RunConfigFactory().construct_subsystem(parser.parse_args(['--seed', '7', '-F', 'json', '--restarts', '3']))
    assert (cfg.seed, cfg.restarts, cfg.format) == (7, 3, Format.JSON)


def _unittest_emit_blocks(tmp_path: pathlib.Path) -> None:
    out = tmp_path / 'report.csv'
    RunConfig(out_path=out).emit_blocks([{'x': 1, 'E': 0.5}, {'x': 2, 'E': None}], [{'total': 0.5}])
    assert out.read_text() == 'x,E\n1,0.5\n2,-\n\ntotal\n0.5\n'
    RunConfig(out_path=out, format=Format.JSON).emit_blocks([{'x': 1}], [{'total': 0.5}])
    assert out.read_text() == '{"x":1}\n\n{"total":0.5}\n'
