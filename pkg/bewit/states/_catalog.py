#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
The catalog of named states: the seven Bloch-diagonal four-by-four states of the reference table,
the Werner family, the maximally entangled state, the three-by-three PPT state embedded into four-by-four,
and the BPD state mixed with asymmetric noise.
"""

from __future__ import annotations
import enum
import math
import typing
import logging
import numpy
from .. import linalg
from .. import basis
from ._error import UnknownStateIDError, DomainError
from ._density import DensityMatrix, LOOSE_PSD_SLACK
from ._bloch import BlochDiagonalSpec, from_bloch_diagonal


Q = 19 / 340
R1 = (math.sqrt(2) - 1) / 4
R2 = (2 - math.sqrt(2)) / 4
R3 = R2 - R1
R4 = R2 / 2
S1 = 0.0557066
S2 = 0.0142664
S3 = 0.0971467

WERNER_LOC_P = 27 / 34
"""
Below this weight of the antisymmetric projector the 4x4 Werner state admits a local hidden variable model.
"""

DEFAULT_ASYM_VISIBILITY = 0.6

_logger = logging.getLogger(__name__)


class StateID(enum.Enum):
    """
    Named states. The first seven members are the rows of the Bloch-diagonal reference table, in order.
    """
    ME = 'ME'
    WERNER_AS = 'Werner-AS'
    WERNER_LOC = 'Werner-loc'
    R6 = 'R6'
    R8 = 'R8'
    BPD = 'BPD'
    SENTIS = 'Sentis'
    RHO_3X3 = 'rho-3x3'
    ASYM = 'asym'

    @property
    def label(self) -> str:
        return str(self.value)

    @staticmethod
    def parse(text: str) -> StateID:
        """
        Accepts either the label or the member name, case-insensitively.

        >>> StateID.parse('werner-loc'), StateID.parse('RHO_3X3')
        (<StateID.WERNER_LOC: 'Werner-loc'>, <StateID.RHO_3X3: 'rho-3x3'>)
        """
        key = text.strip().lower()
        for s in StateID:
            if key in (s.name.lower(), s.label.lower()):
                return s
        raise UnknownStateIDError(f'Unknown state {text!r}; known states: {", ".join(s.label for s in StateID)}')


R6_PERMUTATION = basis.Permutation.from_swaps((6, 11))
R8_PERMUTATION = basis.Permutation.from_swaps((10, 11), (14, 15))

BLOCH_SPECS: typing.Dict[StateID, BlochDiagonalSpec] = {
    StateID.ME: BlochDiagonalSpec(tuple(x / 4 for x in (
        1, 1, -1, 1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1, -1, 1,
    ))),
    StateID.WERNER_AS: BlochDiagonalSpec((1 / 4,) + (-1 / 12,) * 15),
    StateID.WERNER_LOC: BlochDiagonalSpec((1 / 4,) + (-Q,) * 15),
    StateID.R6: BlochDiagonalSpec((
        1 / 4, 0, 0, -R1, R2, R2, 0, -R2, 0, 0, R2, 0, R3, 0, 0, R1,
    ), R6_PERMUTATION),
    StateID.R8: BlochDiagonalSpec((
        1 / 4, R4, -R4, R3, R1, R4, -R4, -R1, 0, -R4, -R4, 0, 0, -R4, -R4, 0,
    ), R8_PERMUTATION),
    StateID.BPD: BlochDiagonalSpec(tuple(x / 12 for x in (
        3, 1, -1, -1, -1, 1, 1, 1, 1, 1, 1, -1, 1, 1, -1, 1,
    ))),
    StateID.SENTIS: BlochDiagonalSpec((
        1 / 4, -S1, -S1, -S1, -S1, -S1, S2, S3, -S1, S3, S2, -S1, S2, -S1, S3, -S1,
    )),
}
"""
Bloch-diagonal coefficients of the seven reference states.
"""

CATALOG_STATES = tuple(BLOCH_SPECS.keys())


def catalog(state_id: StateID, *, asym_visibility: float = DEFAULT_ASYM_VISIBILITY) -> DensityMatrix:
    """
    Returns the named state. The visibility argument is used only by :attr:`StateID.ASYM`.

    :raises: :class:`UnknownStateIDError` for anything that is not a :class:`StateID`.
    """
    if not isinstance(state_id, StateID):
        raise UnknownStateIDError(f'Not a state identifier: {state_id!r}')
    if state_id == StateID.RHO_3X3:
        return rho_3x3()
    if state_id == StateID.ASYM:
        return rho_asym(asym_visibility)
    slack = LOOSE_PSD_SLACK if state_id == StateID.SENTIS else linalg.PSD_SLACK
    return from_bloch_diagonal(BLOCH_SPECS[state_id], slack=slack)


def werner(p: float, dim: int = 4) -> DensityMatrix:
    """
    ``p P_as / d_as + (1 - p) P_sym / d_sym`` where the projectors are built from the swap operator.
    """
    if not (0 <= p <= 1):
        raise DomainError(f'Werner weight must be in [0, 1], got {p}')
    if dim < 2:
        raise basis.InvalidDimensionError(f'Werner states need dimension at least 2, got {dim}')
    swap = _swap(dim)
    eye = numpy.eye(dim * dim)
    p_as = (eye - swap) / 2
    p_sym = (eye + swap) / 2
    d_as = dim * (dim - 1) // 2
    d_sym = dim * (dim + 1) // 2
    return DensityMatrix.checked(p * p_as / d_as + (1 - p) * p_sym / d_sym, dim, dim)


def max_entangled(dim: int = 4) -> DensityMatrix:
    """
    The projector onto ``Σ_k |kk⟩ / √dim``.

    >>> bool(numpy.allclose(max_entangled(2).matrix[[0, 0, 3, 3], [0, 3, 0, 3]], 0.5))
    True
    """
    if dim < 2:
        raise basis.InvalidDimensionError(f'Maximally entangled states need dimension at least 2, got {dim}')
    psi = numpy.eye(dim).reshape(dim * dim) / math.sqrt(dim)
    return DensityMatrix.checked(numpy.outer(psi, psi.conj()), dim, dim)


def bpd_from_bell_mixture() -> DensityMatrix:
    """
    Assembles the BPD state from Bell pairs exactly the way an optical setup would prepare it.
    Starting from two copies of ``|Ψ+⟩`` on the qubit pairs AB and A'B':

    - with probability 1/2 the same Pauli ``σ_k``, ``k ∈ {0, 1, 3}``, is applied to A and to A';
    - with probability 1/2 the pair AB is rotated to ``|Φ-⟩`` by ``σ_2`` and ``σ_k`` is applied to A' only.

    The natural qubit order of the product is (A, B, A', B'); Alice's ququart is (A, A') and Bob's is (B, B'),
    so the axes are regrouped before the result is returned.
    """
    psi_plus = numpy.array([0, 1, 1, 0], dtype=complex) / math.sqrt(2)
    eye = numpy.eye(2)

    def on_first(k: int, psi: numpy.ndarray) -> numpy.ndarray:
        return numpy.kron(basis.pauli(k), eye) @ psi

    components: typing.List[numpy.ndarray] = []
    for k in (0, 1, 3):
        components.append(numpy.kron(on_first(k, psi_plus), on_first(k, psi_plus)))
    phi_minus = on_first(2, psi_plus)
    for k in (0, 1, 3):
        components.append(numpy.kron(phi_minus, on_first(k, psi_plus)))

    natural = sum(numpy.outer(v, v.conj()) for v in components) / len(components)
    # Axes of the ket and the bra: (A, B, A', B') -> (A, A', B, B').
    regrouped = numpy.asarray(natural).reshape((2,) * 8).transpose(0, 2, 1, 3, 4, 6, 5, 7).reshape(16, 16)
    return DensityMatrix.checked(regrouped, 4, 4)


RHO_3X3_DIAGONAL = (1 / 4, R4, -R4, -R3, 0, R4, R4, 0, 0, R4, R4, 0, R1, R4, -R4, R1)

RHO_3X3_OFF_DIAGONAL: typing.Dict[typing.Tuple[int, int], float] = {
    (1, 13): 1 / 8,
    (1, 16): -1 / 8,
    (7, 10): -R4,
    (6, 11): R4,
    (2, 14): R4,
    (3, 15): -R4,
    (4, 13): R3 / 2,
    (4, 16): -R3 / 2,
}
"""
Strictly upper-triangular nonzero entries of the symmetric correlation matrix, one-based.
"""


def rho_3x3_correlations() -> numpy.ndarray:
    """
    The full symmetric 16x16 correlation matrix ``t`` of the three-by-three state, zero-based.
    """
    t = numpy.diag(numpy.array(RHO_3X3_DIAGONAL))
    for (k, ell), value in RHO_3X3_OFF_DIAGONAL.items():
        t[k - 1, ell - 1] = t[ell - 1, k - 1] = value
    return t


def rho_3x3() -> DensityMatrix:
    """
    A PPT state supported on a three-by-three subspace of the four-by-four space,
    given as ``Σ t_kl A_k ⊗ A_l``. It maximizes the trace criterion over such states.
    """
    ops = basis.product_operators()
    m = numpy.einsum('kl,kij,lmn->imjn', rho_3x3_correlations(), ops, ops).reshape(16, 16)
    return DensityMatrix.checked(m, 4, 4)


def rho_asym(v: float) -> DensityMatrix:
    """
    ``v ρ_BPD + (1 - v) (I/4) ⊗ |0⟩⟨0|``: the BPD state with noise that is maximally mixed on Alice's side
    and pure on Bob's. The noise breaks the Bloch-diagonal form for every ``v < 1``.
    """
    if not (0 <= v <= 1):
        raise DomainError(f'Visibility must be in [0, 1], got {v}')
    ket0 = numpy.zeros((4, 4))
    ket0[0, 0] = 1
    noise = numpy.kron(numpy.eye(4) / 4, ket0)
    bpd = from_bloch_diagonal(BLOCH_SPECS[StateID.BPD]).matrix
    return DensityMatrix.checked(v * bpd + (1 - v) * noise, 4, 4)


def _swap(dim: int) -> numpy.ndarray:
    out = numpy.zeros((dim * dim, dim * dim))
    for i in range(dim):
        for j in range(dim):
            out[j * dim + i, i * dim + j] = 1
    return out


def _unittest_catalog_basics() -> None:
    from pytest import raises

    for sid in StateID:
        rho = catalog(sid)
        assert rho.dim_a == rho.dim_b == 4
        assert abs(numpy.trace(rho.matrix) - 1) < 1e-10

    with raises(UnknownStateIDError):
        catalog('BPD')  # type: ignore
    with raises(UnknownStateIDError):
        StateID.parse('GHZ')
    with raises(DomainError):
        werner(1.5)
    with raises(DomainError):
        rho_asym(-0.1)
    with raises(basis.InvalidDimensionError):
        max_entangled(1)

    assert StateID.parse('bpd') == StateID.BPD
    assert StateID.parse('Werner-AS') == StateID.WERNER_AS


def _unittest_rho_3x3_support() -> None:
    rho = rho_3x3()
    for keep in linalg.Subsystem:
        marginal = rho.marginal(keep)
        assert numpy.linalg.matrix_rank(marginal, tol=1e-9) <= 3
