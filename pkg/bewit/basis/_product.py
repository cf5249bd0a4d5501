#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import typing
import dataclasses
import numpy
from ..util import repr_attributes
from ._error import InvalidPermutationError, IndexOutOfRangeError
from ._pauli import OPERATOR_COUNT, product_operators, conj_sign_table
from ._permutation import Permutation


@dataclasses.dataclass(frozen=True, eq=False)
class ProductBasis:
    """
    The orthonormal product operator basis ``A_k`` of a four-level system together with its relabeled partner
    ``B_k = A_perm(k)`` used on Bob's side. Instances are immutable; construct them with :func:`product_basis`.
    """

    permutation: Permutation

    def __post_init__(self) -> None:
        if self.permutation.size != OPERATOR_COUNT:
            raise InvalidPermutationError(f'The product basis needs a permutation of 1..{OPERATOR_COUNT}, '
                                          f'got one of size {self.permutation.size}')

    @property
    def operators_a(self) -> numpy.ndarray:
        """
        Shape (16, 4, 4); element ``k-1`` is ``A_k``.
        """
        return product_operators()

    @property
    def operators_b(self) -> numpy.ndarray:
        """
        Shape (16, 4, 4); element ``k-1`` is ``B_k``.
        """
        return product_operators()[self.permutation.as_indices()]

    def a(self, k: int) -> numpy.ndarray:
        return self.operators_a[self._check(k) - 1]

    def b(self, k: int) -> numpy.ndarray:
        return self.operators_b[self._check(k) - 1]

    def joint_operators(self) -> numpy.ndarray:
        """
        Shape (16, 16, 16); element ``k-1`` is ``A_k ⊗ B_k``.
        """
        a, b = self.operators_a, self.operators_b
        return numpy.einsum('kij,klm->kiljm', a, b).reshape(OPERATOR_COUNT, 16, 16)

    def __repr__(self) -> str:
        return repr_attributes(self, self.permutation.mapping)

    @staticmethod
    def _check(k: int) -> int:
        if not (1 <= k <= OPERATOR_COUNT):
            raise IndexOutOfRangeError(f'Operator index must be in [1, {OPERATOR_COUNT}], got {k}')
        return k


def product_basis(permutation: typing.Optional[Permutation] = None) -> ProductBasis:
    """
    Builds the product basis with the given B-side relabeling; the identity is used by default.

    >>> b = product_basis(Permutation.from_swaps((6, 11)))
    >>> bool(numpy.array_equal(b.b(6), b.a(11)))
    True
    >>> bool(numpy.allclose(b.a(1), numpy.eye(4) / 2))
    True
    """
    return ProductBasis(permutation if permutation is not None else Permutation.identity(OPERATOR_COUNT))


def sign_table(basis: ProductBasis) -> numpy.ndarray:
    """
    The signs ``s(x, y, z) = 16 Tr(A_x A_z A_x A_z) Tr(B_y B_z B_y B_z)`` as an integer array of shape (16, 16, 16)
    indexed by zero-based ``(x-1, y-1, z-1)``.
    Conjugating a Bloch-diagonal state by ``2A_x ⊗ 2B_y`` multiplies its coefficient ``λ_z`` by this sign.
    """
    eta = conj_sign_table()
    idx = basis.permutation.as_indices()
    eta_b = eta[numpy.ix_(idx, idx)]
    return numpy.einsum('xz,yz->xyz', eta, eta_b)


def _unittest_product_basis() -> None:
    from pytest import raises

    basis = product_basis()
    ops = basis.operators_a
    gram = numpy.einsum('kij,lji->kl', ops, ops)
    assert numpy.allclose(gram, numpy.eye(16), atol=1e-12)
    for k in range(16):
        u = 2 * ops[k]
        assert numpy.allclose(u, u.conj().T)
        assert numpy.allclose(u @ u, numpy.eye(4))
    assert numpy.array_equal(basis.operators_b, basis.operators_a)

    r6 = product_basis(Permutation.from_swaps((6, 11)))
    assert numpy.array_equal(r6.b(6), r6.a(11))
    assert numpy.array_equal(r6.b(11), r6.a(6))
    assert numpy.array_equal(r6.b(7), r6.a(7))

    with raises(InvalidPermutationError):
        ProductBasis(Permutation.identity(4))

    joint = basis.joint_operators()
    assert numpy.allclose(joint[5], numpy.kron(ops[5], ops[5]))


def _unittest_sign_table() -> None:
    basis = product_basis()
    s = sign_table(basis)
    assert s.shape == (16, 16, 16)
    assert numpy.all(s[0, 0, :] == 1)
    for x in range(16):
        assert numpy.all(s[x, x, :] == 1)

    r6 = product_basis(Permutation.from_swaps((6, 11)))
    s6 = sign_table(r6)
    a, b = r6.operators_a, r6.operators_b
    for x, y, z in [(0, 1, 5), (3, 1, 10), (7, 12, 5), (15, 10, 2)]:
        direct = 16 * numpy.trace(a[x] @ a[z] @ a[x] @ a[z]) * numpy.trace(b[y] @ b[z] @ b[y] @ b[z])
        assert abs(direct - s6[x, y, z]) < 1e-9
