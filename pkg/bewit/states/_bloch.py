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
from ._error import InvalidStateError
from ._density import DensityMatrix


@dataclasses.dataclass(frozen=True)
class BlochDiagonalSpec:
    """
    A four-by-four state of the form ``ρ = Σ_k λ_k A_k ⊗ B_k`` where ``B_k = A_perm(k)``.
    The coefficients are stored in the one-based order of the product basis (``lambdas[0]`` is ``λ_1``).

    >>> spec = BlochDiagonalSpec.maximally_mixed()
    >>> spec.lambdas[:3]
    (0.25, 0.0, 0.0)
    """

    lambdas: typing.Tuple[float, ...]
    permutation: basis.Permutation = basis.Permutation.identity()

    def __post_init__(self) -> None:
        lambdas = tuple(float(x) for x in self.lambdas)
        object.__setattr__(self, 'lambdas', lambdas)
        if len(lambdas) != basis.OPERATOR_COUNT:
            raise InvalidStateError(f'Expected {basis.OPERATOR_COUNT} Bloch coefficients, got {len(lambdas)}')
        if not all(numpy.isfinite(lambdas)):
            raise InvalidStateError(f'Bloch coefficients must be finite: {lambdas}')
        if self.permutation.size != basis.OPERATOR_COUNT:
            raise basis.InvalidPermutationError(f'Expected a permutation of 1..{basis.OPERATOR_COUNT}')
        # With B_1 = A_1 = I/2 the unit trace fixes the first coefficient.
        if self.permutation(1) == 1 and abs(lambdas[0] - 0.25) > linalg.EQUALITY_TOLERANCE:
            raise InvalidStateError(f'Unit trace requires λ_1 = 1/4, got {lambdas[0]}')

    @staticmethod
    def maximally_mixed() -> BlochDiagonalSpec:
        return BlochDiagonalSpec((0.25,) + (0.0,) * (basis.OPERATOR_COUNT - 1))

    @property
    def product_basis(self) -> basis.ProductBasis:
        return basis.product_basis(self.permutation)

    def to_matrix(self) -> numpy.ndarray:
        """
        The raw 16x16 matrix ``Σ λ_k A_k ⊗ B_k`` without any validation.
        """
        return numpy.einsum('k,kij->ij', numpy.array(self.lambdas), self.product_basis.joint_operators())


def from_bloch_diagonal(spec: BlochDiagonalSpec, slack: float = linalg.PSD_SLACK) -> DensityMatrix:
    """
    Assembles the state from its Bloch-diagonal coefficients.

    :raises: :class:`InvalidStateError` if the result is not a valid state within the given PSD slack.

    >>> rho = from_bloch_diagonal(BlochDiagonalSpec.maximally_mixed())
    >>> bool(numpy.allclose(rho.matrix, numpy.eye(16) / 16))
    True
    """
    return DensityMatrix.checked(spec.to_matrix(), 4, 4, slack=slack)


def _unittest_bloch_spec() -> None:
    from pytest import raises

    with raises(InvalidStateError):
        BlochDiagonalSpec((0.25,) * 15)
    with raises(InvalidStateError):
        BlochDiagonalSpec((0.3,) + (0.0,) * 15)
    with raises(InvalidStateError):
        BlochDiagonalSpec((0.25, float('nan')) + (0.0,) * 14)
    with raises(InvalidStateError):
        from_bloch_diagonal(BlochDiagonalSpec((0.25, 1.0) + (0.0,) * 14))

    # The first coefficient is unconstrained when A_1 is paired with a traceless B_1.
    BlochDiagonalSpec((0.0,) * 16, basis.Permutation.from_swaps((1, 2)))
