#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
JSON representations of states::

    {"dim_a": 4, "dim_b": 4, "matrix": [[[re, im], ...], ...]}     # row-major
    {"lambdas": [16 reals], "permutation": [16 one-based integers]}

Floats are emitted with the shortest repr that round-trips, so a dump followed by a load is bit-exact.
"""

from __future__ import annotations
import typing
import numpy
from .. import basis
from ._error import ParseError
from ._density import DensityMatrix, LOOSE_PSD_SLACK
from ._bloch import BlochDiagonalSpec


def state_to_builtin(rho: DensityMatrix) -> typing.Dict[str, typing.Any]:
    return {
        'dim_a': rho.dim_a,
        'dim_b': rho.dim_b,
        'matrix': [[[float(x.real), float(x.imag)] for x in row] for row in rho.matrix],
    }


def state_from_builtin(obj: typing.Any, slack: float = LOOSE_PSD_SLACK) -> DensityMatrix:
    """
    :raises: :class:`ParseError` if the structure is malformed;
        :class:`InvalidStateError` if it is well-formed but not a valid state.
    """
    try:
        dim_a, dim_b = int(obj['dim_a']), int(obj['dim_b'])
        entries = numpy.array(obj['matrix'], dtype=float)
    except (KeyError, TypeError, ValueError) as ex:
        raise ParseError(f'Malformed state: {type(ex).__name__}: {ex}') from None
    n = dim_a * dim_b
    if entries.shape != (n, n, 2):
        raise ParseError(f'A {dim_a}x{dim_b} state needs a {n}x{n} matrix of [re, im] pairs, '
                         f'got an array of shape {entries.shape}')
    return DensityMatrix.checked(entries[..., 0] + 1j * entries[..., 1], dim_a, dim_b, slack=slack)


def bloch_spec_to_builtin(spec: BlochDiagonalSpec) -> typing.Dict[str, typing.Any]:
    return {
        'lambdas': list(spec.lambdas),
        'permutation': list(spec.permutation.mapping),
    }


def bloch_spec_from_builtin(obj: typing.Any) -> BlochDiagonalSpec:
    try:
        lambdas = tuple(float(x) for x in obj['lambdas'])
        permutation = basis.Permutation(tuple(int(x) for x in obj.get('permutation', range(1, 17))))
    except (KeyError, TypeError, ValueError, AttributeError) as ex:
        if isinstance(ex, basis.InvalidPermutationError):
            raise
        raise ParseError(f'Malformed Bloch specification: {type(ex).__name__}: {ex}') from None
    return BlochDiagonalSpec(lambdas, permutation)


def dumps_state(rho: DensityMatrix) -> str:
    import simplejson
    return str(simplejson.dumps(state_to_builtin(rho), ensure_ascii=False, separators=(',', ':')))


def loads_state(text: str, slack: float = LOOSE_PSD_SLACK) -> DensityMatrix:
    return state_from_builtin(_loads(text), slack=slack)


def dumps_bloch_spec(spec: BlochDiagonalSpec) -> str:
    import simplejson
    return str(simplejson.dumps(bloch_spec_to_builtin(spec), ensure_ascii=False, separators=(',', ':')))


def loads_bloch_spec(text: str) -> BlochDiagonalSpec:
    return bloch_spec_from_builtin(_loads(text))


def loads_state_or_spec(text: str, slack: float = LOOSE_PSD_SLACK) -> typing.Union[DensityMatrix, BlochDiagonalSpec]:
    """
    Accepts either JSON representation; an object with the key ``lambdas`` is a Bloch-diagonal specification.
    """
    obj = _loads(text)
    if isinstance(obj, dict) and 'lambdas' in obj:
        return bloch_spec_from_builtin(obj)
    return state_from_builtin(obj, slack=slack)


def _loads(text: str) -> typing.Any:
    import simplejson
    try:
        return simplejson.loads(text)
    except simplejson.JSONDecodeError as ex:
        raise ParseError(f'Invalid JSON: {ex}') from None


def _unittest_state_json() -> None:
    from pytest import raises
    from ._catalog import catalog, StateID, BLOCH_SPECS

    rho = catalog(StateID.R8)
    back = loads_state(dumps_state(rho))
    assert numpy.array_equal(back.matrix, rho.matrix)
    assert (back.dim_a, back.dim_b) == (4, 4)

    spec = loads_bloch_spec(dumps_bloch_spec(BLOCH_SPECS[StateID.R6]))
    assert spec == BLOCH_SPECS[StateID.R6]

    spec = loads_bloch_spec('{"lambdas": [0.25, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]}')
    assert spec.permutation.is_identity

    assert isinstance(loads_state_or_spec(dumps_bloch_spec(BLOCH_SPECS[StateID.BPD])), BlochDiagonalSpec)
    assert isinstance(loads_state_or_spec(dumps_state(rho)), DensityMatrix)

    with raises(ParseError):
        loads_state('{"dim_a": 2}')
    with raises(ParseError):
        loads_state('{"dim_a": 2, "dim_b": 2, "matrix": [[1, 2], [3, 4]]}')
    with raises(ParseError):
        loads_state('not json')
    with raises(ParseError):
        loads_bloch_spec('{"lambdas": "abc"}')
    with raises(basis.InvalidPermutationError):
        loads_bloch_spec('{"lambdas": [0.25], "permutation": [1, 1]}')
