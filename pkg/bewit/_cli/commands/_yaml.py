#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
The YAML library we use is API-unstable at the time of writing. This facade shields the
rest of the code from breaking changes in the YAML library API or from migration to another library.
"""

from __future__ import annotations
import io
import typing
import numpy
import ruamel.yaml


class YAMLDumper:
    """
    YAML generation facade. NumPy scalars are emitted as plain YAML numbers.
    """
    def __init__(self, explicit_start: bool = False):
        # The round-trip representer retains the ordering of mappings, which keeps report columns in order.
        self._impl = ruamel.yaml.YAML(typ='rt')
        # noinspection PyTypeHints
        self._impl.explicit_start = explicit_start    # type: ignore
        self._impl.default_flow_style = False
        self._impl.representer.add_multi_representer(numpy.floating, _represent_numpy_float)
        self._impl.representer.add_multi_representer(numpy.integer, _represent_numpy_int)

    def dump(self, data: typing.Any, stream: typing.TextIO) -> None:
        self._impl.dump(data, stream)

    def dumps(self, data: typing.Any) -> str:
        s = io.StringIO()
        self.dump(data, s)
        return s.getvalue()


def _represent_numpy_float(self: ruamel.yaml.BaseRepresenter, data: numpy.floating) -> ruamel.yaml.ScalarNode:
    return self.represent_float(float(data))  # type: ignore


def _represent_numpy_int(self: ruamel.yaml.BaseRepresenter, data: numpy.integer) -> ruamel.yaml.ScalarNode:
    return self.represent_int(int(data))  # type: ignore


def _unittest_yaml() -> None:
    ref = YAMLDumper(explicit_start=True).dumps({
        'state': 'BPD',
        'ccnr': numpy.float64(1.5),
        'dims': [numpy.int64(4), float('inf')],
    })
    assert ref == """---
state: BPD
ccnr: 1.5
dims:
- 4
- .inf
"""
