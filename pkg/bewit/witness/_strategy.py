#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import dataclasses
import numpy
from .. import linalg
from .. import basis
from .. import states
from ..util import repr_attributes, repr_array
from ._error import InvalidStrategyError
from ._encoding import SPECTRUM_TOLERANCE
from ._coefficients import WitnessCoefficients


_N = basis.OPERATOR_COUNT
_D = states.MESSAGE_DIMENSION


@dataclasses.dataclass(frozen=True, eq=False)
class PMStrategy:
    """
    A strategy without shared entanglement: Alice prepares ``ρ_x`` on input ``x``, Bob prepares ``ρ_y``,
    and Charlie measures the observable ``C_z`` on both messages. The two-outcome measurement is
    ``M_± = (I ± C_z) / 2``, which requires ``-I ⪯ C_z ⪯ I``.

    :param prep_a: Shape (16, 4, 4).
    :param prep_b: Shape (16, 4, 4).
    :param observables: Shape (16, 16, 16).

    :raises: :class:`InvalidStrategyError` if any of the above is malformed.
    """

    prep_a: numpy.ndarray
    prep_b: numpy.ndarray
    observables: numpy.ndarray

    def __post_init__(self) -> None:
        shapes = {
            'prep_a': (_N, _D, _D),
            'prep_b': (_N, _D, _D),
            'observables': (_N, _D * _D, _D * _D),
        }
        for name, shape in shapes.items():
            a = numpy.array(getattr(self, name), dtype=complex)
            if a.shape != shape:
                raise InvalidStrategyError(f'{name} must have shape {shape}, got {a.shape}')
            a.setflags(write=False)
            object.__setattr__(self, name, a)
        for name in ('prep_a', 'prep_b'):
            for i, m in enumerate(getattr(self, name)):
                diag = states.validate_state(m)
                if not diag.passed:
                    raise InvalidStrategyError(f'{name}[{i}] is not a valid state: {diag}')
        for i, c in enumerate(self.observables):
            if linalg.hermiticity_defect(c) > linalg.HERMITICITY_TOLERANCE:
                raise InvalidStrategyError(f'Observable {i} is not Hermitian')
            eig = linalg.eigvalsh(c)
            if eig[0] < -1 - SPECTRUM_TOLERANCE or eig[-1] > 1 + SPECTRUM_TOLERANCE:
                raise InvalidStrategyError(f'Observable {i} has spectrum [{eig[0]:.6f}, {eig[-1]:.6f}]')

    def __repr__(self) -> str:
        return repr_attributes(self, repr_array(self.prep_a), repr_array(self.prep_b), repr_array(self.observables))


def observable_field(w: WitnessCoefficients, prep_a: numpy.ndarray, prep_b: numpy.ndarray) -> numpy.ndarray:
    """
    ``F_z = Σ_xy w_xyz ρ_x ⊗ ρ_y``, shape (16, 16, 16). The witness value of a strategy is ``Σ_z Tr(F_z C_z)``.
    """
    f = numpy.einsum('xyz,xab,ycd->zacbd', w.w, prep_a, prep_b, optimize=True)
    return numpy.asarray(f.reshape(_N, _D * _D, _D * _D))


def optimal_observables(field: numpy.ndarray) -> numpy.ndarray:
    """
    For each Hermitian ``F_z`` the contraction maximizing ``Tr(F_z C_z)``: ``C_z = Σ_j sgn(c_j) |φ_j⟩⟨φ_j|``
    over the eigenpairs of ``F_z``, with zero eigenvalues mapped to +1. The maximum equals ``‖F_z‖₁``.

    >>> c = optimal_observables(numpy.diag([2.0, -1.0, 0.0])[None])
    >>> numpy.diag(c[0]).real.tolist()
    [1.0, -1.0, 1.0]
    """
    f = numpy.asarray(field)
    herm = (f + f.conj().transpose(0, 2, 1)) / 2
    lam, vec = numpy.linalg.eigh(herm)
    signs = numpy.where(lam >= 0, 1.0, -1.0)
    return numpy.asarray(numpy.einsum('zij,zj,zkj->zik', vec, signs, vec.conj()))


def evaluate_witness(w: WitnessCoefficients, strategy: PMStrategy) -> float:
    """
    ``Σ w_xyz Tr[(ρ_x ⊗ ρ_y) C_z]``.
    """
    if not isinstance(strategy, PMStrategy):
        raise InvalidStrategyError(f'Not a strategy: {strategy!r}')
    return _strategy_value(w, strategy.prep_a, strategy.prep_b, strategy.observables)


def product_strategy() -> PMStrategy:
    """
    The product strategy that reaches 64 on the canonical witness without iteration:
    ``ρ_x = (2A_x) |0⟩⟨0| (2A_x)†`` for both senders and ``C_z = 4 A_z ⊗ A_z``.
    """
    ops = basis.product_operators()
    ground = states.basis_state(0)
    prep = numpy.einsum('xij,jk,xlk->xil', 2 * ops, ground, (2 * ops).conj())
    observables = 4 * basis.product_basis().joint_operators()
    return PMStrategy(prep, prep, observables)


def classical_strategy(w: WitnessCoefficients) -> PMStrategy:
    """
    Classical messages: Alice sends ``x1`` and Bob sends ``y1``, where ``x = 4 x0 + x1 + 1``;
    Charlie decodes with the optimal diagonal observables. Reaches 64 on the canonical witness.
    """
    prep = numpy.stack([states.basis_state(basis.PauliIndex.from_flat(k).k1) for k in range(1, _N + 1)])
    return PMStrategy(prep, prep, optimal_observables(observable_field(w, prep, prep)))


def _strategy_value(w: WitnessCoefficients,
                    prep_a: numpy.ndarray,
                    prep_b: numpy.ndarray,
                    observables: numpy.ndarray) -> float:
    f = observable_field(w, prep_a, prep_b)
    return float(numpy.einsum('zij,zji->', f, observables).real)


def _unittest_strategy() -> None:
    from pytest import raises, approx
    from ._coefficients import canonical_coefficients

    can = canonical_coefficients()
    assert evaluate_witness(can, product_strategy()) == approx(64)
    assert evaluate_witness(can, classical_strategy(can)) == approx(64)

    prod = product_strategy()
    zero = PMStrategy(prod.prep_a, prod.prep_b, numpy.zeros((16, 16, 16)))
    assert evaluate_witness(can, zero) == 0.0

    with raises(InvalidStrategyError):
        PMStrategy(prod.prep_a, prod.prep_b, 2 * prod.observables)
    with raises(InvalidStrategyError):
        PMStrategy(prod.prep_a[:4], prod.prep_b, prod.observables)
    with raises(InvalidStrategyError):
        PMStrategy(2 * prod.prep_a, prod.prep_b, prod.observables)
