#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

import numpy
import pytest
import bewit
from bewit.basis import product_basis, sign_table, hermitian_basis_array, conj_sign, PauliIndex
from .._random import random_permutation, random_hermitian


def _unittest_hermitian_basis_completeness(rng: numpy.random.Generator) -> None:
    for dim in (2, 3, 4, 5, 6):
        g = hermitian_basis_array(dim)
        m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        coefficients = numpy.einsum('kij,ji->k', g, m)
        assert numpy.allclose(numpy.einsum('k,kij->ij', coefficients, g), m, atol=1e-10)
        assert numpy.allclose(g[0], numpy.eye(dim) / numpy.sqrt(dim))
        assert numpy.allclose(numpy.einsum('kii->k', g[1:]), 0, atol=1e-12)


def _unittest_product_operators_are_pauli_products() -> None:
    ops = bewit.basis.product_operators()
    for k in range(1, 17):
        idx = PauliIndex.from_flat(k)
        expected = numpy.kron(bewit.basis.pauli(idx.k0), bewit.basis.pauli(idx.k1)) / 2
        assert numpy.array_equal(ops[k - 1], expected)
    assert numpy.allclose(ops[0], numpy.eye(4) / 2)


def _unittest_conj_sign_is_commutation() -> None:
    ops = bewit.basis.product_operators()
    for x in range(1, 17):
        for z in range(1, 17):
            a, b = ops[x - 1], ops[z - 1]
            commute = numpy.allclose(a @ b, b @ a)
            assert conj_sign(x, z) == (1 if commute else -1)


def _unittest_sign_table_conjugation(rng: numpy.random.Generator) -> None:
    for perm in (bewit.basis.Permutation.identity(), bewit.states.R8_PERMUTATION, random_permutation(rng)):
        pb = product_basis(perm)
        s = sign_table(pb)
        k = numpy.einsum('xab,ycd->xyacbd', 2 * pb.operators_a, 2 * pb.operators_b).reshape(16, 16, 16, 16)
        joint = pb.joint_operators()
        conjugated = numpy.einsum('xyij,zjk,xylk->xyzil', k, joint, k.conj(), optimize=True)
        expected = s[:, :, :, None, None] * joint[None, None, :, :, :]
        assert numpy.allclose(conjugated, expected, atol=1e-12)


def _unittest_permutation_errors() -> None:
    with pytest.raises(bewit.basis.InvalidPermutationError):
        bewit.basis.Permutation((1, 1, 2))
    with pytest.raises(bewit.basis.InvalidPermutationError):
        bewit.basis.Permutation.from_swaps((0, 3))
    with pytest.raises(bewit.basis.IndexOutOfRangeError):
        product_basis().a(17)
    with pytest.raises(bewit.basis.IndexOutOfRangeError):
        PauliIndex.from_flat(0)
    with pytest.raises(bewit.basis.InvalidDimensionError):
        hermitian_basis_array(1)


def _unittest_product_basis_completeness(rng: numpy.random.Generator) -> None:
    for perm in (bewit.basis.Permutation.identity(), bewit.states.R6_PERMUTATION, random_permutation(rng)):
        pb = product_basis(perm)
        for ops in (pb.operators_a, pb.operators_b):
            assert numpy.allclose(numpy.einsum('kij,lji->kl', ops, ops), numpy.eye(16), rtol=0, atol=1e-12)
            for _ in range(20):
                m = random_hermitian(rng, 4)
                coefficients = numpy.einsum('kij,ji->k', ops, m)
                assert numpy.allclose(coefficients.imag, 0, atol=1e-12)
                assert numpy.allclose(numpy.einsum('k,kij->ij', coefficients, ops), m, rtol=0, atol=1e-12)
