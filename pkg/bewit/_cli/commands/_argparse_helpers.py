#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import enum
import typing
import argparse


def make_enum_action(enum_type: typing.Type[enum.Enum]) -> typing.Type[argparse.Action]:
    """
    An argparse action that accepts the lowercase member names of the enumeration.

    >>> import enum
    >>> class Color(enum.Enum):
    ...     RED = 1
    ...     DARK_BLUE = 2
    >>> parser = argparse.ArgumentParser()
    >>> _ = parser.add_argument('--color', action=make_enum_action(Color), default=Color.RED)
    >>> parser.parse_args(['--color', 'dark-blue']).color
    <Color.DARK_BLUE: 2>
    >>> parser.parse_args([]).color
    <Color.RED: 1>
    """
    mapping: typing.Dict[str, typing.Any] = {}
    for e in enum_type:
        mapping[e.name.lower().replace('_', '-')] = e

    class ArgparseEnumAction(argparse.Action):
        # noinspection PyShadowingBuiltins
        def __init__(self,
                     option_strings: typing.Sequence[str],
                     dest:           str,
                     nargs:          typing.Union[int, str, None] = None,
                     const:          typing.Any = None,
                     default:        typing.Any = None,
                     type:           typing.Any = None,
                     choices:        typing.Any = None,
                     required:       bool = False,
                     help:           typing.Optional[str] = None,
                     metavar:        typing.Any = None):
            def type_proxy(x: str) -> typing.Any:
                """A proxy is needed because a method of an unhashable type is unhashable."""
                return mapping.get(x.strip().lower().replace('_', '-'))

            if type is None:
                type = type_proxy

            if choices is None:
                choices = [
                    _NamedChoice(key, value) for key, value in mapping.items()
                ]

            super(ArgparseEnumAction, self).__init__(
                option_strings,
                dest,
                nargs=nargs,
                const=const,
                default=default,
                type=type,
                choices=choices,
                required=required,
                help=help,
                metavar=metavar,
            )

        def __call__(self,
                     parser:        argparse.ArgumentParser,
                     namespace:     argparse.Namespace,
                     values:        typing.Union[str, typing.Sequence[typing.Any], None],
                     option_string: typing.Optional[str] = None) -> None:
            setattr(namespace, self.dest, values)

    return ArgparseEnumAction


def parse_float_list(text: str) -> typing.List[float]:
    """
    Comma-separated reals; ``inf`` is accepted.
    A ``start:stop:count`` triple expands into an evenly spaced grid that includes both ends.

    >>> parse_float_list('0.5, 1, inf')
    [0.5, 1.0, inf]
    >>> parse_float_list('0:1:5')
    [0.0, 0.25, 0.5, 0.75, 1.0]
    """
    text = text.strip()
    if text.count(':') == 2:
        start, stop, count = text.split(':')
        n = int(count)
        if n < 2:
            raise argparse.ArgumentTypeError(f'A grid needs at least two points: {text!r}')
        a, b = float(start), float(stop)
        return [a + (b - a) * i / (n - 1) for i in range(n)]
    try:
        return [float(x) for x in text.split(',') if x.strip()]
    except ValueError as ex:
        raise argparse.ArgumentTypeError(str(ex)) from None


class _NamedChoice:
    def __init__(self, key: str, value: typing.Any):
        self.key = key
        self.value = value

    def __eq__(self, other: object) -> bool:
        return bool(self.value == other)

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return self.key
