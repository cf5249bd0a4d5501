#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import typing
import dataclasses
import numpy
from ._error import InvalidPermutationError, IndexOutOfRangeError


@dataclasses.dataclass(frozen=True)
class Permutation:
    """
    A bijection on ``{1..n}`` stored one-based, so that ``perm(k)`` reads exactly like the index
    relabeling ``B_k = A_perm(k)`` used by the Bloch-diagonal state tables.

    >>> p = Permutation.from_swaps((6, 11))
    >>> p(6), p(11), p(7)
    (11, 6, 7)
    >>> p.is_identity
    False
    >>> Permutation((2, 1, 3)).inverse()
    Permutation(mapping=(2, 1, 3))
    """

    mapping: typing.Tuple[int, ...]

    def __post_init__(self) -> None:
        mapping = tuple(int(x) for x in self.mapping)
        object.__setattr__(self, 'mapping', mapping)
        if sorted(mapping) != list(range(1, len(mapping) + 1)):
            raise InvalidPermutationError(f'Not a bijection on 1..{len(mapping)}: {mapping}')

    @staticmethod
    def identity(size: int = 16) -> Permutation:
        return Permutation(tuple(range(1, size + 1)))

    @staticmethod
    def from_swaps(*pairs: typing.Tuple[int, int], size: int = 16) -> Permutation:
        """
        Applies the transpositions in the order they are given, starting from the identity.
        """
        out = list(range(1, size + 1))
        for a, b in pairs:
            if not (1 <= a <= size and 1 <= b <= size):
                raise InvalidPermutationError(f'Swap {a}<->{b} is out of range 1..{size}')
            out[a - 1], out[b - 1] = out[b - 1], out[a - 1]
        return Permutation(tuple(out))

    @property
    def size(self) -> int:
        return len(self.mapping)

    @property
    def is_identity(self) -> bool:
        return self.mapping == tuple(range(1, self.size + 1))

    def inverse(self) -> Permutation:
        out = [0] * self.size
        for k, v in enumerate(self.mapping, start=1):
            out[v - 1] = k
        return Permutation(tuple(out))

    def as_indices(self) -> numpy.ndarray:
        """
        Zero-based index array ``idx`` such that ``idx[k-1] == perm(k) - 1``; handy for NumPy fancy indexing.
        """
        return numpy.array(self.mapping, dtype=int) - 1

    def __call__(self, k: int) -> int:
        if not (1 <= k <= self.size):
            raise IndexOutOfRangeError(f'Index {k} is out of range 1..{self.size}')
        return self.mapping[k - 1]


def _unittest_permutation() -> None:
    from pytest import raises

    assert Permutation.identity().is_identity
    assert Permutation.identity(3).mapping == (1, 2, 3)

    r8 = Permutation.from_swaps((10, 11), (14, 15))
    assert r8(10) == 11 and r8(11) == 10 and r8(14) == 15 and r8(15) == 14
    assert r8.inverse() == r8
    assert r8.as_indices()[9] == 10

    with raises(InvalidPermutationError):
        Permutation((1, 1, 3))
    with raises(InvalidPermutationError):
        Permutation((0, 1, 2))
    with raises(InvalidPermutationError):
        Permutation.from_swaps((1, 17))
    with raises(IndexOutOfRangeError):
        r8(0)
