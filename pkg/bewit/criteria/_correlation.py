#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import typing
import dataclasses
import numpy
from .. import linalg
from .. import basis
from .. import states
from ..util import repr_attributes, repr_array


IMAGINARY_TOLERANCE = 1e-10


@dataclasses.dataclass(frozen=True, eq=False)
class CorrelationTensor:
    """
    The real matrix ``t_kl = Tr(ρ G_k ⊗ H_l)`` of a bipartite state in a pair of orthonormal Hermitian bases.
    """

    entries: numpy.ndarray

    def __post_init__(self) -> None:
        e = numpy.array(self.entries, dtype=float)
        if e.ndim != 2:
            raise linalg.DimensionMismatchError(f'A correlation tensor is a matrix, got shape {e.shape}')
        e.setflags(write=False)
        object.__setattr__(self, 'entries', e)

    @property
    def diagonal(self) -> numpy.ndarray:
        return numpy.diagonal(self.entries)

    def trace_norm(self) -> float:
        return linalg.trace_norm(self.entries)

    def reconstruct(self, basis_a: numpy.ndarray, basis_b: numpy.ndarray) -> numpy.ndarray:
        """
        ``Σ t_kl G_k ⊗ H_l``; recovers the state when the bases are complete.
        """
        da, db = basis_a.shape[1], basis_b.shape[1]
        return numpy.einsum('kl,kij,lmn->imjn', self.entries, basis_a, basis_b).reshape(da * db, da * db)

    def __repr__(self) -> str:
        return repr_attributes(self, repr_array(self.entries))


def correlation_tensor(rho: states.DensityMatrix,
                       basis_a: typing.Optional[numpy.ndarray] = None,
                       basis_b: typing.Optional[numpy.ndarray] = None) -> CorrelationTensor:
    """
    Computes ``t_kl`` in the given bases, which are arrays of shape (n, d, d).
    The generalized Gell-Mann bases of the respective local dimensions are used by default.

    :raises: :class:`bewit.linalg.DimensionMismatchError` if a basis does not fit the state;
        :class:`bewit.linalg.NotHermitianError` if the correlations come out complex.
    """
    basis_a = basis.hermitian_basis_array(rho.dim_a) if basis_a is None else numpy.asarray(basis_a)
    basis_b = basis.hermitian_basis_array(rho.dim_b) if basis_b is None else numpy.asarray(basis_b)
    for name, b, d in (('A', basis_a, rho.dim_a), ('B', basis_b, rho.dim_b)):
        if b.ndim != 3 or b.shape[1:] != (d, d):
            raise linalg.DimensionMismatchError(f'Basis {name} of shape {b.shape} does not fit local dimension {d}')
    r = rho.matrix.reshape(rho.dim_a, rho.dim_b, rho.dim_a, rho.dim_b)
    t = numpy.einsum('imjn,kji,lnm->kl', r, basis_a, basis_b)
    imag = float(numpy.max(numpy.abs(t.imag)))
    if imag > IMAGINARY_TOLERANCE:
        raise linalg.NotHermitianError(f'Correlations have an imaginary part of {imag:.3e}; is the state Hermitian?')
    return CorrelationTensor(t.real)


def pauli_correlation_tensor(rho: states.DensityMatrix,
                             permutation: typing.Optional[basis.Permutation] = None) -> CorrelationTensor:
    """
    The correlation tensor of a four-by-four state in the product bases ``A_k`` and ``B_l = A_perm(l)``.
    """
    _ensure_message_dimension(rho)
    pb = basis.product_basis(permutation)
    return correlation_tensor(rho, pb.operators_a, pb.operators_b)


def ccnr(rho: states.DensityMatrix) -> float:
    """
    The computable cross norm or realignment value: the sum of the singular values of the correlation tensor.
    It does not depend on the choice of orthonormal bases. Values above one certify entanglement.
    """
    return correlation_tensor(rho).trace_norm()


def diagonal_correlations(rho: states.DensityMatrix,
                          permutation: typing.Optional[basis.Permutation] = None) -> numpy.ndarray:
    """
    The 16 values ``t_kk = Tr(ρ A_k ⊗ B_k)`` of a four-by-four state, in one-based order.
    """
    _ensure_message_dimension(rho)
    joint = basis.product_basis(permutation).joint_operators()
    t = numpy.einsum('kij,ji->k', joint, rho.matrix)
    imag = float(numpy.max(numpy.abs(t.imag)))
    if imag > IMAGINARY_TOLERANCE:
        raise linalg.NotHermitianError(f'Correlations have an imaginary part of {imag:.3e}; is the state Hermitian?')
    return numpy.asarray(t.real)


def trace_criterion(rho: states.DensityMatrix, permutation: typing.Optional[basis.Permutation] = None) -> float:
    """
    ``S(ρ) = Σ_k |t_kk|`` with the B-side basis relabeled by the permutation.
    It never exceeds the CCNR value and coincides with it on Bloch-diagonal states.
    Values above one certify entanglement and are detected by the prepare-and-measure witness.
    """
    return float(numpy.sum(numpy.abs(diagonal_correlations(rho, permutation))))


def trace_criterion_witness(rho: states.DensityMatrix,
                            permutation: typing.Optional[basis.Permutation] = None) -> numpy.ndarray:
    """
    The witness operator ``W = I - Σ_k sgn(t_kk) A_k ⊗ B_k`` adapted to the state.
    ``Tr(W σ) >= 0`` for every separable ``σ``, and ``Tr(W ρ) = 1 - S(ρ)``.
    """
    signs = numpy.sign(diagonal_correlations(rho, permutation))
    joint = basis.product_basis(permutation).joint_operators()
    return numpy.eye(16) - numpy.einsum('k,kij->ij', signs, joint)


def _ensure_message_dimension(rho: states.DensityMatrix) -> None:
    if (rho.dim_a, rho.dim_b) != (4, 4):
        raise linalg.DimensionMismatchError(f'Expected a 4x4 state, got {rho.dim_a}x{rho.dim_b}')


def _unittest_correlation_tensor() -> None:
    from pytest import raises, approx

    mixed = states.DensityMatrix(numpy.eye(16) / 16, 4, 4)
    t = pauli_correlation_tensor(mixed).entries
    assert t[0, 0] == approx(0.25)
    assert numpy.allclose(t[1:, :], 0) and numpy.allclose(t[:, 1:], 0)
    assert not t.flags.writeable
    assert trace_criterion(mixed) == approx(0.25)

    with raises(linalg.DimensionMismatchError):
        pauli_correlation_tensor(states.max_entangled(3))
    with raises(linalg.DimensionMismatchError):
        correlation_tensor(mixed, basis.hermitian_basis_array(3))
