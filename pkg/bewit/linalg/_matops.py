#
# Copyright (c) 2026 Bewit Development Team
# This software is distributed under the terms of the MIT License.
#

"""
Dense complex matrix primitives.
Problems handled by the library are small (the largest operator is 64x64 at local dimension 8),
so everything here operates on plain dense :class:`numpy.ndarray` values and never mutates its inputs.
"""

from __future__ import annotations
import enum
import typing
import numpy
import scipy.linalg
from ._error import NotHermitianError, DimensionMismatchError


HERMITICITY_TOLERANCE = 1e-10
"""
Maximum entrywise deviation of a matrix from its conjugate transpose that is still accepted as Hermitian.
"""

PSD_SLACK = 1e-9
"""
A matrix is considered positive semidefinite if its smallest eigenvalue is not below ``-PSD_SLACK``.
"""

EQUALITY_TOLERANCE = 1e-9
"""
Default absolute tolerance of numerical equality checks.
"""


class Subsystem(enum.Enum):
    """
    Selects one side of a bipartite system.
    """
    A = enum.auto()
    B = enum.auto()


def kron(a: numpy.ndarray, b: numpy.ndarray, *rest: numpy.ndarray) -> numpy.ndarray:
    """
    Kronecker product of two or more matrices, left to right.

    >>> kron(numpy.eye(2), numpy.eye(2)).shape
    (4, 4)
    >>> kron(numpy.eye(2), numpy.eye(3), numpy.eye(2)).shape
    (12, 12)
    """
    out = numpy.kron(a, b)
    for m in rest:
        out = numpy.kron(out, m)
    return out


def hermiticity_defect(m: numpy.ndarray) -> float:
    """
    Largest entrywise magnitude of ``m - m†``.

    >>> hermiticity_defect(numpy.array([[1, 1j], [-1j, 2]]))
    0.0
    >>> hermiticity_defect(numpy.array([[0, 1], [0, 0]]))
    1.0
    """
    m = _ensure_square(m)
    return float(numpy.max(numpy.abs(m - m.conj().T)))


def hermitian_eig(m: numpy.ndarray,
                  tolerance: float = HERMITICITY_TOLERANCE) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
    """
    Eigendecomposition of a Hermitian matrix.

    :param m: The matrix; must be Hermitian within the tolerance.
    :param tolerance: Entrywise Hermiticity tolerance.
    :return: Real eigenvalues in ascending order and the unitary matrix of the corresponding eigenvectors (columns).

    :raises: :class:`NotHermitianError` if the symmetry check fails.

    >>> w, v = hermitian_eig(numpy.diag([3.0, 1.0, 2.0]))
    >>> numpy.allclose(w, [1, 2, 3])
    True
    """
    m = _ensure_square(m)
    defect = hermiticity_defect(m)
    if defect > tolerance:
        raise NotHermitianError(f'Hermiticity defect {defect:.3e} exceeds the tolerance {tolerance:.1e}')
    # Symmetrize so that LAPACK sees an exactly Hermitian input.
    return typing.cast(typing.Tuple[numpy.ndarray, numpy.ndarray], numpy.linalg.eigh((m + m.conj().T) / 2))


def eigvalsh(m: numpy.ndarray, tolerance: float = HERMITICITY_TOLERANCE) -> numpy.ndarray:
    """
    Same as :func:`hermitian_eig` but returns the eigenvalues only.
    """
    m = _ensure_square(m)
    defect = hermiticity_defect(m)
    if defect > tolerance:
        raise NotHermitianError(f'Hermiticity defect {defect:.3e} exceeds the tolerance {tolerance:.1e}')
    return typing.cast(numpy.ndarray, numpy.linalg.eigvalsh((m + m.conj().T) / 2))


def trace_norm(m: numpy.ndarray) -> float:
    """
    Sum of the singular values. Works for rectangular matrices as well.

    >>> trace_norm(numpy.zeros((3, 3)))
    0.0
    >>> round(trace_norm(numpy.diag([1.0, -2.0, 3.0])), 12)
    6.0
    """
    m = numpy.asarray(m)
    if m.ndim != 2:
        raise DimensionMismatchError(f'Expected a matrix, got an array of shape {m.shape}')
    return float(numpy.sum(scipy.linalg.svdvals(m)))


def partial_transpose(rho: numpy.ndarray, dim_a: int, dim_b: int) -> numpy.ndarray:
    """
    Transposes the indices of the subsystem B. This is an involution that preserves trace and Hermiticity.

    >>> m = numpy.arange(16).reshape(4, 4)
    >>> numpy.array_equal(partial_transpose(partial_transpose(m, 2, 2), 2, 2), m)
    True
    """
    rho = _ensure_bipartite(rho, dim_a, dim_b)
    n = dim_a * dim_b
    return rho.reshape(dim_a, dim_b, dim_a, dim_b).transpose(0, 3, 2, 1).reshape(n, n)


def partial_trace(rho: numpy.ndarray, dim_a: int, dim_b: int, keep: Subsystem) -> numpy.ndarray:
    """
    Traces out the subsystem that is not kept.

    >>> partial_trace(numpy.eye(16) / 16, 4, 4, Subsystem.A).diagonal().tolist()
    [0.25, 0.25, 0.25, 0.25]
    """
    rho = _ensure_bipartite(rho, dim_a, dim_b)
    r = rho.reshape(dim_a, dim_b, dim_a, dim_b)
    if keep == Subsystem.A:
        return numpy.einsum('ijkj->ik', r)
    if keep == Subsystem.B:
        return numpy.einsum('ijil->jl', r)
    raise ValueError(f'Invalid subsystem: {keep!r}')


def is_unitary(m: numpy.ndarray, tolerance: float = EQUALITY_TOLERANCE) -> bool:
    m = _ensure_square(m)
    return bool(numpy.allclose(m @ m.conj().T, numpy.eye(m.shape[0]), rtol=0, atol=tolerance))


def _ensure_square(m: numpy.ndarray) -> numpy.ndarray:
    m = numpy.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionMismatchError(f'Expected a non-empty square matrix, got an array of shape {m.shape}')
    return m


def _ensure_bipartite(rho: numpy.ndarray, dim_a: int, dim_b: int) -> numpy.ndarray:
    rho = numpy.asarray(rho)
    if dim_a < 1 or dim_b < 1:
        raise DimensionMismatchError(f'Invalid subsystem dimensions: {dim_a}x{dim_b}')
    n = dim_a * dim_b
    if rho.shape != (n, n):
        raise DimensionMismatchError(f'A {dim_a}x{dim_b} operator must be {n}x{n}, got {rho.shape}')
    return rho


def _unittest_kron() -> None:
    x = numpy.array([[0, 1], [1, 0]], dtype=complex)
    z = numpy.diag([1, -1]).astype(complex)
    xz = kron(x, z)
    ref = numpy.zeros((4, 4), dtype=complex)
    ref[0, 2] = 1
    ref[1, 3] = -1
    ref[2, 0] = 1
    ref[3, 1] = -1
    assert numpy.array_equal(xz, ref)
    assert numpy.array_equal(kron(numpy.eye(2), numpy.eye(2)), numpy.eye(4))

    rng = numpy.random.default_rng(0)
    a = rng.normal(size=(3, 3))
    b = rng.normal(size=(3, 3))
    assert abs(numpy.trace(kron(a, b)) - numpy.trace(a) * numpy.trace(b)) < 1e-12


def _unittest_hermitian_eig() -> None:
    from pytest import raises, approx

    w, _ = hermitian_eig(numpy.array([[0, 1], [1, 0]], dtype=complex))
    assert w.tolist() == approx([-1, 1])

    with raises(NotHermitianError):
        hermitian_eig(numpy.array([[0, 1], [0, 0]], dtype=complex))

    with raises(DimensionMismatchError):
        hermitian_eig(numpy.zeros((2, 3)))


def _unittest_partial_trace() -> None:
    from pytest import raises
    rng = numpy.random.default_rng(1)
    ra = numpy.diag(rng.random(3))
    rb = numpy.diag(rng.random(2))
    prod = kron(ra, rb)
    assert numpy.allclose(partial_trace(prod, 3, 2, Subsystem.A), ra * numpy.trace(rb))
    assert numpy.allclose(partial_trace(prod, 3, 2, Subsystem.B), rb * numpy.trace(ra))
    with raises(DimensionMismatchError):
        partial_trace(prod, 2, 2, Subsystem.A)
    with raises(DimensionMismatchError):
        partial_transpose(prod, 3, 3)
