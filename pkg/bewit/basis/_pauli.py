#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import typing
import functools
import dataclasses
import numpy
from ._error import IndexOutOfRangeError


_PAULI = (
    numpy.array([[1, 0], [0, 1]], dtype=complex),
    numpy.array([[0, 1], [1, 0]], dtype=complex),
    numpy.array([[0, -1j], [1j, 0]], dtype=complex),
    numpy.array([[1, 0], [0, -1]], dtype=complex),
)

OPERATOR_COUNT = 16
"""
Number of product operators ``A_k`` spanning the operators on a four-level system.
"""


def pauli(i: int) -> numpy.ndarray:
    """
    The Pauli matrix ``σ_i``: identity, X, Y, Z for ``i = 0, 1, 2, 3``. A new array is returned on every call.

    >>> bool((pauli(2) == [[0, -1j], [1j, 0]]).all())
    True
    """
    if not isinstance(i, (int, numpy.integer)) or not (0 <= i <= 3):
        raise IndexOutOfRangeError(f'Pauli index must be in [0, 3], got {i!r}')
    return _PAULI[i].copy()


@dataclasses.dataclass(frozen=True)
class PauliIndex:
    """
    Identifies the product operator ``A_k = σ_{k0}⊗σ_{k1} / 2``.
    The flat index is one-based: ``flat = 4*k0 + k1 + 1``.

    >>> PauliIndex(1, 3).flat
    8
    >>> PauliIndex.from_flat(8)
    PauliIndex(k0=1, k1=3)
    """

    k0: int
    k1: int

    def __post_init__(self) -> None:
        for name, value in (('k0', self.k0), ('k1', self.k1)):
            if not (0 <= value <= 3):
                raise IndexOutOfRangeError(f'{name} must be in [0, 3], got {value}')

    @property
    def flat(self) -> int:
        return 4 * self.k0 + self.k1 + 1

    @staticmethod
    def from_flat(flat: int) -> PauliIndex:
        if not (1 <= flat <= OPERATOR_COUNT):
            raise IndexOutOfRangeError(f'Flat operator index must be in [1, {OPERATOR_COUNT}], got {flat}')
        k0, k1 = divmod(flat - 1, 4)
        return PauliIndex(k0, k1)

    def operator(self) -> numpy.ndarray:
        """
        The matrix ``A_k``; ``2*A_k`` is Hermitian and unitary.
        """
        return numpy.kron(_PAULI[self.k0], _PAULI[self.k1]) / 2


def conj_sign(x: typing.Union[PauliIndex, int], z: typing.Union[PauliIndex, int]) -> int:
    """
    The sign ``η`` in ``Tr(A_x A_z A_x A_z) = η/4``: +1 when the two product operators commute, -1 otherwise.
    Flat one-based indices are accepted as well.

    >>> conj_sign(1, 7)
    1
    >>> conj_sign(2, 4)
    -1
    >>> conj_sign(PauliIndex(1, 2), PauliIndex(3, 2))
    -1
    """
    return int(conj_sign_table()[_flat(x) - 1, _flat(z) - 1])


@functools.lru_cache(None)
def conj_sign_table() -> numpy.ndarray:
    """
    All values of :func:`conj_sign` as a read-only 16x16 integer matrix indexed by zero-based flat indices.
    """
    def single(i: int, j: int) -> int:
        return 1 if (i == j or i == 0 or j == 0) else -1

    out = numpy.empty((OPERATOR_COUNT, OPERATOR_COUNT), dtype=int)
    for x in range(OPERATOR_COUNT):
        for z in range(OPERATOR_COUNT):
            x0, x1 = divmod(x, 4)
            z0, z1 = divmod(z, 4)
            out[x, z] = single(x0, z0) * single(x1, z1)
    out.setflags(write=False)
    return out


@functools.lru_cache(None)
def product_operators() -> numpy.ndarray:
    """
    The 16 operators ``A_k`` stacked into a read-only array of shape (16, 4, 4); ``A_k`` is at position ``k-1``.
    """
    out = numpy.stack([PauliIndex.from_flat(k).operator() for k in range(1, OPERATOR_COUNT + 1)])
    out.setflags(write=False)
    return out


def _flat(i: typing.Union[PauliIndex, int]) -> int:
    if isinstance(i, PauliIndex):
        return i.flat
    return PauliIndex.from_flat(int(i)).flat


def _unittest_pauli() -> None:
    from pytest import raises
    for i in range(4):
        assert numpy.allclose(pauli(i) @ pauli(i), numpy.eye(2))
    assert numpy.allclose(pauli(0), numpy.eye(2))
    assert numpy.allclose(pauli(1) @ pauli(3), -1j * pauli(2))
    with raises(IndexOutOfRangeError):
        pauli(4)
    with raises(IndexOutOfRangeError):
        pauli(-1)
    with raises(IndexOutOfRangeError):
        PauliIndex(0, 4)
    with raises(IndexOutOfRangeError):
        PauliIndex.from_flat(17)


def _unittest_conj_sign_brute_force() -> None:
    ops = product_operators()
    for x in range(1, 17):
        assert conj_sign(1, x) == 1
        assert conj_sign(x, x) == 1
        for z in range(1, 17):
            direct = 4 * numpy.trace(ops[x - 1] @ ops[z - 1] @ ops[x - 1] @ ops[z - 1])
            assert abs(direct.imag) < 1e-12
            assert round(direct.real) == conj_sign(x, z)
            assert abs(direct.real - conj_sign(x, z)) < 1e-9
