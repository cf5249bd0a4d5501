#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import typing
import dataclasses
import numpy
from .. import linalg
from .. import states


EIGENVALUE_SUM_CUTOFF = 1e-12
"""
Pairs of eigenvalues whose sum does not exceed this value are excluded from the spectral sum.
"""

SEPARABLE_QFI_LIMIT = 8.0
"""
The largest quantum Fisher information a separable 4x4 state can reach with any of the local Hamiltonians
below (each local term has the spectrum ±1). Exceeding it certifies metrologically useful entanglement.
"""

METROLOGY_HAMILTONIANS: typing.Dict[str, numpy.ndarray] = {
    'I⊗Z': numpy.diag([1.0, -1.0, 1.0, -1.0]),
    'Z⊗I': numpy.diag([1.0, 1.0, -1.0, -1.0]),
}
"""
The single-party Hamiltonians considered for metrology, keyed by their two-qubit Pauli structure.
"""


def local_hamiltonian(h: numpy.ndarray) -> numpy.ndarray:
    """
    ``H ⊗ I + I ⊗ H``.
    """
    h = numpy.asarray(h)
    eye = numpy.eye(h.shape[0])
    return numpy.kron(h, eye) + numpy.kron(eye, h)


def qfi(rho: states.DensityMatrix, hamiltonian: numpy.ndarray) -> float:
    """
    The quantum Fisher information of the state for the unitary family generated by the Hamiltonian:
    ``F = 2 Σ_ij (λ_i - λ_j)² / (λ_i + λ_j) |⟨i|H|j⟩|²`` over pairs with ``λ_i + λ_j`` above the cutoff.
    For pure states this equals four times the variance of the Hamiltonian.

    :raises: :class:`bewit.linalg.NotHermitianError`, :class:`bewit.linalg.DimensionMismatchError`.
    """
    hamiltonian = numpy.asarray(hamiltonian, dtype=complex)
    if hamiltonian.shape != rho.matrix.shape:
        raise linalg.DimensionMismatchError(f'Hamiltonian of shape {hamiltonian.shape} does not fit the state '
                                            f'of shape {rho.matrix.shape}')
    if linalg.hermiticity_defect(hamiltonian) > linalg.HERMITICITY_TOLERANCE:
        raise linalg.NotHermitianError('The Hamiltonian is not Hermitian')
    lam, vec = linalg.hermitian_eig(rho.matrix)
    h = vec.conj().T @ hamiltonian @ vec
    total = lam[:, None] + lam[None, :]
    mask = total > EIGENVALUE_SUM_CUTOFF
    diff = lam[:, None] - lam[None, :]
    weights = numpy.zeros_like(total)
    weights[mask] = diff[mask] ** 2 / total[mask]
    return float(2 * numpy.sum(weights * numpy.abs(h) ** 2))


@dataclasses.dataclass(frozen=True)
class QFIResult:
    value: float
    hamiltonian: str
    """Key into :data:`METROLOGY_HAMILTONIANS` of the maximizing candidate."""


def max_qfi(rho: states.DensityMatrix) -> QFIResult:
    """
    The largest QFI over the candidate local Hamiltonians; ties resolve to the first candidate.
    """
    best: typing.Optional[QFIResult] = None
    for name, h in METROLOGY_HAMILTONIANS.items():
        value = qfi(rho, local_hamiltonian(h))
        if best is None or value > best.value:
            best = QFIResult(value, name)
    assert best is not None
    return best


def is_metrologically_useful(rho: states.DensityMatrix) -> bool:
    return max_qfi(rho).value > SEPARABLE_QFI_LIMIT


def _unittest_qfi() -> None:
    from pytest import approx, raises

    mixed = states.DensityMatrix(numpy.eye(16) / 16, 4, 4)
    h = local_hamiltonian(METROLOGY_HAMILTONIANS['I⊗Z'])
    assert qfi(mixed, h) == approx(0, abs=1e-12)

    me = states.max_entangled(4)
    assert qfi(me, h) == approx(16)
    assert max_qfi(me).value == approx(16)

    with raises(linalg.DimensionMismatchError):
        qfi(me, numpy.eye(4))
    with raises(linalg.NotHermitianError):
        qfi(me, numpy.triu(numpy.ones((16, 16))))
