#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import sys
import time
import typing
import logging
import argparse
import bewit
from . import commands

_logger = logging.getLogger(__name__)

_LOG_FORMAT = '%(asctime)s %(process)5d %(levelname)-8s %(name)s: %(message)s'

EXIT_FAILURE = 1
"""
Unexpected failures: I/O errors, missing optional dependencies, bugs.
"""

EXIT_INVALID_INPUT = 2
"""
The library rejected the input: unknown state, invalid matrix or file, visibility out of range, and so on.
Same as the exit code of argparse on invalid arguments.
"""


def main() -> None:
    logging.basicConfig(format=_LOG_FORMAT)  # The level is set once the arguments are parsed.
    try:
        exit(_main_impl(sys.argv[1:]))
    except KeyboardInterrupt:
        _logger.info('Interrupted')
        exit(EXIT_FAILURE)
    except AssertionError:
        raise  # Internal inconsistency; the stack trace is needed.
    except bewit.linalg.BewitError as ex:
        print(f'Error: {type(ex).__name__}: {ex}', file=sys.stderr)
        _logger.debug('Rejected input', exc_info=True)
        exit(EXIT_INVALID_INPUT)
    except Exception as ex:
        print(f'Error: {type(ex).__name__}: {ex}', file=sys.stderr)
        _logger.info('Unhandled exception: %s', ex, exc_info=True)
        exit(EXIT_FAILURE)


def _main_impl(argv: typing.Sequence[str]) -> int:
    command_instances = [cls() for cls in commands.get_available_command_classes()]
    args = _construct_argument_parser(command_instances).parse_args(argv)
    _configure_logging(args.verbose)
    _logger.debug('Parsed args: %s', args)

    cmd: commands.Command = args.command_instance
    subsystems = [sf.construct_subsystem(args) for sf in cmd.subsystem_factories]
    started_at = time.monotonic()
    result = cmd.execute(args, subsystems)
    _logger.info('%s completed in %.1f seconds', cmd.names[0], time.monotonic() - started_at)
    assert isinstance(result, int)
    return result


def _construct_argument_parser(command_instances: typing.Sequence[commands.Command]) -> argparse.ArgumentParser:
    root_parser = argparse.ArgumentParser(
        prog='bewit',
        formatter_class=argparse.RawTextHelpFormatter,
        description=r'''
A command line tool for prepare-and-measure entanglement witnesses with
four-dimensional messages. It builds the witnesses, simulates the protocol
on shared states, searches for the best strategies without entanglement,
and evaluates the CCNR, trace, PPT and metrological criteria on a catalog
of bound entangled states.

Reports go into stdout (or the file given with --out) as CSV, JSON or YAML.
Diagnostics go into stderr; use -v to see more of them.
'''.strip('\r\n'))

    root_parser.add_argument(
        '--version', '-V',
        action='version',
        version=f'%(prog)s {bewit.__version__}',
        help='Print the version of the tool, which is also the version of the library, and exit.',
    )
    root_parser.add_argument(
        '--verbose', '-v',
        action='count',
        help='Log progress (-v) or also the numerical details (-vv) into stderr.',
    )

    subparsers = root_parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True
    for cmd in command_instances:
        parser = subparsers.add_parser(
            cmd.names[0],
            help=cmd.help,
            epilog=('Examples:\n' + cmd.examples) if cmd.examples else '',
            aliases=cmd.names[1:],
            formatter_class=argparse.RawTextHelpFormatter,
        )
        cmd.register_arguments(parser)
        for sf in cmd.subsystem_factories:
            sf.register_arguments(parser)
        parser.set_defaults(command_instance=cmd)

    return root_parser


def _configure_logging(verbosity_level: typing.Optional[int]) -> None:
    log_level = {
        0: logging.WARNING,
        1: logging.INFO,
    }.get(verbosity_level or 0, logging.DEBUG)
    logging.root.setLevel(log_level)

    try:
        import coloredlogs  # Optional.
        coloredlogs.install(level=log_level, fmt=_LOG_FORMAT)
    except ImportError:
        _logger.debug('Colored logs are not available')

    # The thread pool backend is chatty at DEBUG.
    if log_level < logging.INFO:
        logging.getLogger('joblib').setLevel(logging.INFO)


def _unittest_argument_parser() -> None:
    from pytest import raises
    instances = [cls() for cls in commands.get_available_command_classes()]
    parser = _construct_argument_parser(instances)

    args = parser.parse_args(['sim', '--state', 'BPD', '--summary', '-F', 'json'])
    assert args.command_instance.names[0] == 'simulate'
    assert args.summary and args.state == 'BPD'

    args = parser.parse_args(['-vv', 'wg', '--state', 'canonical'])
    assert args.verbose == 2
    assert args.command_instance.names == ['witness-gen', 'wg']

    with raises(SystemExit):
        parser.parse_args([])
