#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import typing
import numpy
from .. import linalg
from ._error import DomainError, InvalidStateError
from ._density import DensityMatrix, validate_state


MESSAGE_DIMENSION = 4


def embed(rho: DensityMatrix, dim: int) -> DensityMatrix:
    """
    Embeds a ``d⊗d`` state into ``dim⊗dim`` using the first ``d`` levels of each side.

    >>> from bewit.states import max_entangled
    >>> complex(embed(max_entangled(2), 3).matrix[4, 0])
    (0.5+0j)
    """
    d = rho.local_dimension
    if dim < d:
        raise linalg.DimensionMismatchError(f'Cannot embed a {d}x{d} state into {dim}x{dim}')
    out = numpy.zeros((dim, dim, dim, dim), dtype=complex)
    out[:d, :d, :d, :d] = rho.matrix.reshape(d, d, d, d)
    return DensityMatrix(out.reshape(dim * dim, dim * dim), dim, dim)


def isotropic_mix(rho: DensityMatrix, v: float, dim: typing.Optional[int] = None) -> DensityMatrix:
    """
    ``v ρ + (1 - v) I/dim²`` where ``ρ`` is first embedded into ``dim⊗dim`` if ``dim`` exceeds its local dimension.
    By default, ``dim`` equals the local dimension of the input.

    :raises: :class:`DomainError` if ``v`` is outside ``[0, 1]``;
        :class:`bewit.linalg.DimensionMismatchError` if ``dim`` is too small.
    """
    if not (0 <= v <= 1):
        raise DomainError(f'Visibility must be in [0, 1], got {v}')
    dim = rho.local_dimension if dim is None else dim
    embedded = embed(rho, dim)
    n = dim * dim
    return DensityMatrix(v * embedded.matrix + (1 - v) * numpy.eye(n) / n, dim, dim)


def reprepare_channel(rho: DensityMatrix,
                      rho_a: numpy.ndarray,
                      rho_b: numpy.ndarray,
                      message_dim: int = MESSAGE_DIMENSION) -> DensityMatrix:
    """
    The local channel that keeps the part of a ``D⊗D`` state living in the first ``message_dim`` levels of each side
    and re-prepares the product ``ρ_A ⊗ ρ_B`` with the remaining probability:
    ``ε(ρ) = P ρ P + Tr[(I - P) ρ] ρ_A ⊗ ρ_B``. The output is a ``message_dim⊗message_dim`` state.

    :raises: :class:`InvalidStateError` if ``ρ_A`` or ``ρ_B`` is not a valid state;
        :class:`bewit.linalg.DimensionMismatchError` if the dimensions do not fit.
    """
    dim = rho.local_dimension
    d = message_dim
    if dim < d:
        raise linalg.DimensionMismatchError(f'Input local dimension {dim} is below the message dimension {d}')
    rho_a = numpy.asarray(rho_a, dtype=complex)
    rho_b = numpy.asarray(rho_b, dtype=complex)
    for name, m in (('rho_a', rho_a), ('rho_b', rho_b)):
        if m.shape != (d, d):
            raise linalg.DimensionMismatchError(f'{name} must be {d}x{d}, got {m.shape}')
        diag = validate_state(m)
        if not diag.passed:
            raise InvalidStateError(f'{name} is not a valid state: {diag}')

    kept = rho.matrix.reshape(dim, dim, dim, dim)[:d, :d, :d, :d].reshape(d * d, d * d)
    discarded_weight = numpy.trace(rho.matrix) - numpy.trace(kept)
    out = kept + discarded_weight * numpy.kron(rho_a, rho_b)
    return DensityMatrix(out, d, d)


def basis_state(index: int, dim: int = MESSAGE_DIMENSION) -> numpy.ndarray:
    """
    The projector ``|index⟩⟨index|``.
    """
    out = numpy.zeros((dim, dim), dtype=complex)
    out[index, index] = 1
    return out


def _unittest_channels() -> None:
    from pytest import raises
    from ._catalog import max_entangled

    me = max_entangled(4)
    assert numpy.allclose(isotropic_mix(me, 1.0).matrix, me.matrix)
    assert numpy.allclose(isotropic_mix(me, 0.0).matrix, numpy.eye(16) / 16)
    mixed = isotropic_mix(me, 0.3, 6)
    assert mixed.dim == 36
    assert abs(numpy.trace(mixed.matrix) - 1) < 1e-12

    with raises(DomainError):
        isotropic_mix(me, 1.1)
    with raises(linalg.DimensionMismatchError):
        isotropic_mix(me, 0.5, 3)

    # At D = 4 the projector is the identity and the re-preparation branch has zero weight.
    rho = isotropic_mix(me, 0.7)
    out = reprepare_channel(rho, basis_state(0), basis_state(0))
    assert numpy.allclose(out.matrix, rho.matrix)

    with raises(InvalidStateError):
        reprepare_channel(rho, numpy.eye(4), basis_state(0))
    with raises(linalg.DimensionMismatchError):
        reprepare_channel(rho, numpy.eye(2) / 2, basis_state(0))
