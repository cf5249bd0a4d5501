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
from .. import criteria
from ..util import repr_attributes


WEIGHT = 1 / 16
"""
Magnitude of every nonzero witness coefficient.
"""

ZERO_CORRELATION_CUTOFF = 1e-12
"""
Diagonal correlations of at most this magnitude are treated as zero when a witness is built from a state.
"""

_SHAPE = (basis.OPERATOR_COUNT,) * 3


@dataclasses.dataclass(frozen=True, eq=False)
class WitnessCoefficients:
    """
    The 16³ coefficients ``w_xyz`` of a prepare-and-measure witness and the B-side relabeling they were built with.
    The array is indexed by zero-based ``(x-1, y-1, z-1)``; every entry is one of ``-1/16``, ``0``, ``+1/16``.
    """

    w: numpy.ndarray
    permutation: basis.Permutation = dataclasses.field(default_factory=basis.Permutation.identity)

    def __post_init__(self) -> None:
        w = numpy.array(self.w, dtype=float)
        if w.shape != _SHAPE:
            raise linalg.DimensionMismatchError(f'Witness coefficients must have shape {_SHAPE}, got {w.shape}')
        snapped = numpy.round(w / WEIGHT)
        if not numpy.allclose(snapped * WEIGHT, w, rtol=0, atol=1e-12) or numpy.any(numpy.abs(snapped) > 1):
            raise states.ParseError('Witness coefficients must be -1/16, 0, or +1/16')
        w = snapped * WEIGHT + 0.0  # no negative zeros
        w.setflags(write=False)
        object.__setattr__(self, 'w', w)
        if self.permutation.size != basis.OPERATOR_COUNT:
            raise basis.InvalidPermutationError(f'Expected a permutation of 1..{basis.OPERATOR_COUNT}')

    @property
    def signs(self) -> numpy.ndarray:
        """
        The per-``z`` signs ``sgn(t_zz)`` recovered from the ``x = y = 1`` entries.
        Meaningful only if :meth:`factorizes` holds.
        """
        s = basis.sign_table(basis.product_basis(self.permutation))
        return numpy.round(self.w[0, 0, :] * s[0, 0, :] / WEIGHT).astype(int)

    def factorizes(self) -> bool:
        """
        True if the coefficients have the form ``sgn_z η(x, z) η(y', z') / 16`` implied by their own signs.
        """
        return bool(numpy.array_equal(self.w, witness_coefficients(self.signs, self.permutation).w))

    def __getitem__(self, xyz: typing.Tuple[int, int, int]) -> float:
        """
        One-based access: ``w[x, y, z]``.
        """
        x, y, z = (int(i) for i in xyz)
        for i in (x, y, z):
            if not (1 <= i <= basis.OPERATOR_COUNT):
                raise basis.IndexOutOfRangeError(f'Witness index {i} is out of range 1..{basis.OPERATOR_COUNT}')
        return float(self.w[x - 1, y - 1, z - 1])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WitnessCoefficients):
            return self.permutation == other.permutation and bool(numpy.array_equal(self.w, other.w))
        return NotImplemented

    def __repr__(self) -> str:
        return repr_attributes(self, signs=self.signs.tolist(), permutation=self.permutation.mapping)


def witness_coefficients(diag_t: typing.Sequence[float],
                         permutation: typing.Optional[basis.Permutation] = None) -> WitnessCoefficients:
    """
    ``w_xyz = sgn(t_zz) Tr(A_x A_z A_x A_z) Tr(B_y B_z B_y B_z)``, with ``sgn(0) = 0``.

    >>> w = witness_coefficients([1.0] + [0.0] * 15)
    >>> w[1, 1, 1], w[5, 9, 2], float(abs(w.w).sum())
    (0.0625, 0.0, 16.0)
    """
    t = numpy.asarray(diag_t, dtype=float)
    if t.shape != (basis.OPERATOR_COUNT,):
        raise linalg.DimensionMismatchError(f'Expected {basis.OPERATOR_COUNT} diagonal correlations, '
                                            f'got shape {t.shape}')
    sgn = numpy.where(numpy.abs(t) <= ZERO_CORRELATION_CUTOFF, 0.0, numpy.sign(t))
    pb = basis.product_basis(permutation)
    w = basis.sign_table(pb) * sgn[None, None, :] * WEIGHT
    return WitnessCoefficients(w, pb.permutation)


def canonical_coefficients() -> WitnessCoefficients:
    """
    All signs positive and no relabeling; any other witness of this family reaches the same separable maximum.

    >>> canonical_coefficients()[2, 2, 4]
    0.0625
    """
    return witness_coefficients(numpy.ones(basis.OPERATOR_COUNT))


def witness_for_state(rho: states.DensityMatrix,
                      permutation: typing.Optional[basis.Permutation] = None) -> WitnessCoefficients:
    """
    The witness adapted to the signs of the diagonal correlations of the state.
    """
    return witness_coefficients(criteria.diagonal_correlations(rho, permutation), permutation)


def _unittest_coefficients() -> None:
    from pytest import raises

    can = canonical_coefficients()
    assert float(numpy.abs(can.w).sum()) == 256.0
    assert numpy.array_equal(can.w, can.w.transpose(1, 0, 2))
    assert can.factorizes()
    assert can == witness_coefficients(numpy.full(16, 0.3))

    r6 = witness_for_state(states.catalog(states.StateID.R6), states.R6_PERMUTATION)
    assert numpy.all(r6.w[:, :, 1] == 0) and numpy.all(r6.w[:, :, 2] == 0)
    assert r6.signs[1] == 0
    assert r6.factorizes()

    with raises(linalg.DimensionMismatchError):
        WitnessCoefficients(numpy.zeros((16, 16)))
    with raises(states.ParseError):
        WitnessCoefficients(numpy.full(_SHAPE, 0.5))
    with raises(basis.IndexOutOfRangeError):
        can[0, 1, 1]  # noqa
