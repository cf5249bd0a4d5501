#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Simulation of the prepare-and-measure protocol in which the senders share a bipartite state:
Alice and Bob encode their inputs by local unitaries and Charlie measures a two-outcome observable
on both messages.
"""

from __future__ import annotations
import typing
import logging
import dataclasses
import numpy
from .. import linalg
from .. import basis
from .. import states
from ..util import repr_attributes
from ._error import NotUnitaryError, SpectrumOutOfRangeError
from ._coefficients import WitnessCoefficients


SPECTRUM_TOLERANCE = 1e-9
"""
Observables may exceed the interval ``[-1, +1]`` by this much.
"""

SEPARABLE_BOUND = 64.0
"""
The largest witness value found for senders without shared entanglement.
Supported by numerical search only; :data:`SEPARABLE_LOWER_BOUND` is the part that is proven.
"""

SEPARABLE_LOWER_BOUND = 64.0
"""
Attained by an explicit strategy with product preparations; see :func:`bewit.witness.product_strategy`.
"""

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class PauliEncoding:
    """
    The entanglement-assisted strategy ``U_x = 2A_x``, ``V_y = 2B_y``, ``C_z = 4A_z ⊗ B_z``.
    Arrays are stacked along the first axis in zero-based order.
    """

    permutation: basis.Permutation
    unitaries_a: numpy.ndarray
    unitaries_b: numpy.ndarray
    observables: numpy.ndarray

    def __repr__(self) -> str:
        return repr_attributes(self, permutation=self.permutation.mapping)


def pauli_encoding(permutation: typing.Optional[basis.Permutation] = None) -> PauliEncoding:
    pb = basis.product_basis(permutation)
    out = PauliEncoding(
        permutation=pb.permutation,
        unitaries_a=2 * pb.operators_a,
        unitaries_b=2 * pb.operators_b,
        observables=4 * pb.joint_operators(),
    )
    for a in (out.unitaries_a, out.unitaries_b, out.observables):
        a.setflags(write=False)
    return out


def correlator(rho: states.DensityMatrix,
               u_x: numpy.ndarray,
               v_y: numpy.ndarray,
               c_z: numpy.ndarray) -> float:
    """
    ``E = Tr[(U ⊗ V) ρ (U ⊗ V)† C]``: the expected outcome of Charlie's ±1 measurement.

    :raises: :class:`NotUnitaryError` if an encoding is not unitary;
        :class:`SpectrumOutOfRangeError` if the observable is not a contraction;
        :class:`bewit.linalg.NotHermitianError` if the observable is not Hermitian.

    >>> me = states.max_entangled(4)
    >>> round(correlator(me, numpy.eye(4), numpy.eye(4), numpy.eye(16)), 12)
    1.0
    """
    for name, u in (('U', u_x), ('V', v_y)):
        if numpy.shape(u) != (rho.dim_a, rho.dim_a) or not linalg.is_unitary(u):
            raise NotUnitaryError(f'{name} is not a {rho.dim_a}x{rho.dim_a} unitary')
    _check_observable(c_z, rho.dim)
    k = numpy.kron(u_x, v_y)
    return float(numpy.trace(k @ rho.matrix @ k.conj().T @ c_z).real)


def simulate_correlators(rho: states.DensityMatrix, encoding: typing.Optional[PauliEncoding] = None) -> numpy.ndarray:
    """
    All 4096 correlators ``E_xyz`` of the encoding as a real array of shape (16, 16, 16), zero-based.
    The Pauli encoding with the identity relabeling is used by default.
    """
    _ensure_message_dimension(rho)
    encoding = encoding if encoding is not None else pauli_encoding()
    n = basis.OPERATOR_COUNT
    k = numpy.einsum('xab,ycd->xyacbd', encoding.unitaries_a, encoding.unitaries_b).reshape(n, n, 16, 16)
    conjugated = numpy.einsum('xyij,jk,xylk->xyil', k, rho.matrix, k.conj(), optimize=True)
    e = numpy.einsum('xyij,zji->xyz', conjugated, encoding.observables, optimize=True)
    return numpy.asarray(e.real)


def entangled_value(rho: states.DensityMatrix, w: WitnessCoefficients) -> float:
    """
    ``Q = Σ w_xyz E_xyz`` obtained by simulating the protocol with the Pauli encoding matching the witness.
    For a witness built from the signs of the state this equals ``64 Σ_z |t_zz|``.
    """
    e = simulate_correlators(rho, pauli_encoding(w.permutation))
    return float(numpy.einsum('xyz,xyz->', w.w, e))


def effective_operator(w: WitnessCoefficients, encoding: typing.Optional[PauliEncoding] = None) -> numpy.ndarray:
    """
    ``Σ w_xyz (U_x ⊗ V_y)† C_z (U_x ⊗ V_y)``: the operator whose expectation on the shared state
    is the witness value.
    """
    encoding = encoding if encoding is not None else pauli_encoding(w.permutation)
    n = basis.OPERATOR_COUNT
    k = numpy.einsum('xab,ycd->xyacbd', encoding.unitaries_a, encoding.unitaries_b).reshape(n, n, 16, 16)
    weighted = numpy.einsum('xyz,zij->xyij', w.w, encoding.observables)
    return numpy.asarray(numpy.einsum('xyji,xyjk,xykl->il', k.conj(), weighted, k, optimize=True))


@dataclasses.dataclass(frozen=True)
class WitnessScalars:
    """
    The quantities that frame a witness evaluation.
    ``classical`` is the best value found with classical messages; ``None`` if it was not searched for.
    """
    entangled: float
    separable: float = SEPARABLE_BOUND
    separable_lower: float = SEPARABLE_LOWER_BOUND
    classical: typing.Optional[float] = None

    def __post_init__(self) -> None:
        if self.separable_lower > self.separable:
            raise linalg.BewitError('The separable lower bound exceeds the separable bound')

    @property
    def violation(self) -> float:
        """
        Positive if the entangled value certifies entanglement.
        """
        return self.entangled - self.separable


def _check_observable(c: numpy.ndarray, dim: int) -> None:
    c = numpy.asarray(c)
    if c.shape != (dim, dim):
        raise linalg.DimensionMismatchError(f'The observable must be {dim}x{dim}, got {c.shape}')
    eig = linalg.eigvalsh(c)
    if eig[0] < -1 - SPECTRUM_TOLERANCE or eig[-1] > 1 + SPECTRUM_TOLERANCE:
        raise SpectrumOutOfRangeError(f'Observable spectrum [{eig[0]:.6f}, {eig[-1]:.6f}] exceeds [-1, 1]')


def _ensure_message_dimension(rho: states.DensityMatrix) -> None:
    if (rho.dim_a, rho.dim_b) != (states.MESSAGE_DIMENSION, states.MESSAGE_DIMENSION):
        raise linalg.DimensionMismatchError(f'Messages are ququarts; got a {rho.dim_a}x{rho.dim_b} state')


def _unittest_correlator() -> None:
    from pytest import raises, approx

    bpd = states.catalog(states.StateID.BPD)
    enc = pauli_encoding()
    assert correlator(bpd, enc.unitaries_a[0], enc.unitaries_b[0], enc.observables[1]) == approx(1 / 3)

    mixed = states.DensityMatrix(numpy.eye(16) / 16, 4, 4)
    e = simulate_correlators(mixed)
    assert numpy.allclose(e[:, :, 0], 1)
    assert numpy.allclose(e[:, :, 1:], 0)

    with raises(NotUnitaryError):
        correlator(bpd, 2 * numpy.eye(4), numpy.eye(4), numpy.eye(16))
    with raises(SpectrumOutOfRangeError):
        correlator(bpd, numpy.eye(4), numpy.eye(4), 2 * numpy.eye(16))
    with raises(linalg.DimensionMismatchError):
        simulate_correlators(states.max_entangled(3))
